"""
Fusion factorisation and the Q-system
=====================================

Check at the level of classical characters that D(l, lambda) splits over
the decomposition lambda = l(w_i1 + ... + w_ik) + lambda_0, and that the
Q-system short exact sequence holds with and without grading.
"""

from itertools import product

from alcovekit.demchar import verify_fusion, verify_qsystem
from alcovekit.rootsys import build_root_system
from alcovekit.steinberg import canonical_decomposition

a1 = build_root_system("A1^1")
print("A1 l=2, 5w1:", verify_fusion(a1, 2, (5,)).summary())

d4 = build_root_system("D4^1")
lam = (3, 0, 0, 1)
dec = canonical_decomposition(d4, 2, lam)
print("D4 l=2", lam, "parts", [tuple(map(int, p)) for p in dec.parts], "remainder", tuple(map(int, dec.remainder)))
print("  ", verify_fusion(d4, 2, lam).summary())

a2 = build_root_system("A2^1")
fails = [lam for lam in product(range(5), repeat=2) if not verify_fusion(a2, 3, lam).ok]
print("A2 l=3, all lambda with coords <= 4: failures", fails)

for level, lam, i in [(1, (1, 0), 1), (2, (1, 1), 2), (2, (0, 2), 2)]:
    rep = verify_qsystem(a2, level, lam, i)
    print(f"A2 Q-system l={level} lambda={lam} i={i}: mu={rep.mu}; {rep.summary()}")
