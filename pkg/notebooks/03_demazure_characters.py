"""
Demazure characters
===================

Characters of D(l, lambda) are built by Demazure operators from the
certificate data. Once l reaches lambda(theta^vee) they agree with the
irreducible characters.
"""

from alcovekit.demchar import (
    classical_character,
    demazure_character,
    dimension,
    format_character,
    format_graded,
    graded_classical_character,
    weyl_dimension,
)
from alcovekit.rootsys import build_root_system

a1 = build_root_system("A1^1")
f = demazure_character(a1, 1, (2,))
print("A1 D(1, 2w1):", format_character(classical_character(f)))
print("  graded:", format_graded(graded_classical_character(f)))
print("  dimensions of D(1, m w1):", [dimension(demazure_character(a1, 1, (m,))) for m in range(7)])

a2 = build_root_system("A2^1")
for level in (1, 2, 3):
    d = dimension(demazure_character(a2, level, (2, 1)))
    print(f"A2 dim D({level}, 2w1+w2) = {d}   (Weyl dimension {weyl_dimension(a2, (2, 1))})")

e6 = build_root_system("E6^1")
print("E6 dim D(1, w1) =", dimension(demazure_character(e6, 1, (1, 0, 0, 0, 0, 0))))
