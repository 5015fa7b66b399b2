"""
Steinberg certificates
======================

For a level l and dominant lambda, find mu in M+ and w with
w t_mu (l Lambda_0 - lambda) dominant, then check the answer from scratch.
"""

import json

from alcovekit.rootsys import build_root_system
from alcovekit.steinberg import SteinbergCertificate, steinberg_certificate, verify_certificate


def fmt(v):
    return "(" + ", ".join(str(c) for c in v) + ")"

rs = build_root_system("A1^1")
for level, lam in [(2, (3,)), (1, (2,)), (3, (0,))]:
    c = steinberg_certificate(rs, level, lam)
    L = c.Lambda
    print(f"A1 l={level} lambda={lam}: mu={fmt(c.mu)} w={c.w.word} "
          f"Lambda={fmt(L.classical)} + {L.level} Lambda_0 + {L.degree} delta")

# Exceptional and twisted types go through the same folding.
for label, level, lam in [("E8^1", 3, (1, 0, 0, 0, 0, 0, 2, 0)), ("E6^2", 2, (1, 3, 0, 2)), ("D4^3", 4, (5, 1))]:
    rs = build_root_system(label)
    c = steinberg_certificate(rs, level, lam)
    print(label, "mu", fmt(c.mu), "|v_D| =", len(c.v_D_word), verify_certificate(rs, c))

# Certificates serialize to plain JSON and can be re-checked later.
text = json.dumps(c.to_record())
print(text)
back = SteinbergCertificate.from_record(json.loads(text))
print("re-verified:", verify_certificate(back.rs, back))
