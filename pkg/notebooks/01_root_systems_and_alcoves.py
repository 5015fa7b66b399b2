"""
Root data and alcove folding
============================

Build a few root systems, look at their Cartan data, then fold rational
points into the fundamental alcove and compare word length with the number
of walls crossed.
"""

from fractions import Fraction

from alcovekit.afweyl import (
    LexPoint,
    fold_to_alcove,
    interior_point,
    m_lattice_basis,
    separating_count,
    z_alpha_modulus,
)
from alcovekit.rootsys import build_root_system, fold_to_dominant


def fmt(v):
    return "(" + ", ".join(str(c) for c in v) + ")"

# Cartan data. Row i of the Cartan matrix is alpha_i written in fundamental weights.
for label in ["A2^1", "C2^1", "G2^1", "E6^2", "A4^2"]:
    rs = build_root_system(label)
    print(label, "finite part", rs.finite_type, "cartan", rs.cartan, "theta", rs.theta, "a0", rs.a0)

# Hyperplane spacing: short roots of C3 only see every second wall.
c3 = build_root_system("C3^1")
for r in c3.positive_roots:
    print("  C3 root", r, "long" if c3.is_long(r) else "short", "Z_alpha =", z_alpha_modulus(c3, r), "Z")

# The translation lattice M, as weights.
for label in ["A1^1", "C2^1", "A2^2"]:
    print(label, "M basis", [fmt(b) for b in m_lattice_basis(build_root_system(label))])

# Finite folding: w(x_plus) = x.
a2 = build_root_system("A2^1")
w, xp = fold_to_dominant(a2, (1, -1))
print("A2: (1,-1) folds to", fmt(xp), "via", w.word)

# Affine folding with the rho perturbation breaking ties on walls.
g2 = build_root_system("G2^1")
x = LexPoint((Fraction(-7, 3), Fraction(5, 2)), g2.rho)
cert = fold_to_alcove(g2, x)
print("G2 point", fmt(x.base), "word", cert.word, "mu'", fmt(cert.mu_prime), "u", cert.u.word)
print("  walls crossed:", separating_count(g2, interior_point(g2), x))
