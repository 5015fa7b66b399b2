from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from alcovekit.afweyl import (
    AffineWeight,
    AffineWeylElement,
    LexPoint,
    affine_simple_reflection,
    apply_affine_word,
    closure_contains,
    element_from_word,
    fold_to_alcove,
    interior_point,
    lambda0,
    length,
    m_contains,
    m_lattice_basis,
    m_plus_contains,
    reduced_word_of,
    separating_count,
    translate_affine_weight,
    z_alpha_modulus,
)
from alcovekit.errors import InvalidElementError, PreconditionError
from alcovekit.rootsys import FiniteWeylElement, build_root_system
from alcovekit.sweeps import SWEEP_LABELS

fracs = st.fractions(min_value=-12, max_value=12, max_denominator=6)


def lp(rs, *coords):
    return LexPoint(tuple(Fraction(c) for c in coords), rs.rho)


def det(rows):
    rows = [[Fraction(c) for c in r] for r in rows]
    n, d = len(rows), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        d *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return d


def same_lattice(rs, basis):
    """``basis`` (weights) spans M: contained in M with the same covolume."""
    ours = m_lattice_basis(rs)
    return all(m_contains(rs, b) for b in basis) and abs(det(basis)) == abs(det(ours))


# -- Z_alpha ---------------------------------------------------------------------


def test_z_examples():
    c3 = build_root_system("C3^1")
    short = next(r for r in c3.positive_roots if not c3.is_long(r))
    assert z_alpha_modulus(c3, short) == 2
    a22 = build_root_system("A2^2")
    assert z_alpha_modulus(a22, a22.theta) == Fraction(1, 2)
    e6 = build_root_system("E6^1")
    assert {z_alpha_modulus(e6, r) for r in e6.positive_roots} == {1}
    g2 = build_root_system("G2^1")
    assert z_alpha_modulus(g2, (1, 0)) == 3
    with pytest.raises(ValueError):
        z_alpha_modulus(e6, (1, 0, 0, 0, 0, 7))


@pytest.mark.parametrize("label", SWEEP_LABELS + ("C2^1", "B2^1"))
def test_z_against_lattice_oracle(label):
    # Z_alpha is the set of k with k*alpha in M; its positive generator is the least such k
    rs = build_root_system(label)
    candidates = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]
    for r in rs.positive_roots:
        w = rs.root_to_weight(r)
        k = next(k for k in candidates if m_contains(rs, tuple(k * c for c in w)))
        assert z_alpha_modulus(rs, r) == k


# -- M ---------------------------------------------------------------------------


def test_m_examples():
    a1 = build_root_system("A1^1")
    assert m_lattice_basis(a1) == [(2,)]
    assert m_contains(a1, (2,)) and m_contains(a1, (0,))
    assert not m_contains(a1, (1,))
    a2 = build_root_system("A2^1")
    assert same_lattice(a2, [a2.simple_root(1), a2.simple_root(2)])
    c2 = build_root_system("C2^1")
    basis = [c2.root_to_weight((2, 1)), c2.root_to_weight((0, 1))]
    assert same_lattice(c2, basis)
    assert not m_contains(c2, c2.root_to_weight((1, 0)))


@pytest.mark.parametrize("label", SWEEP_LABELS)
def test_m_contains_orbit_and_is_lattice(label):
    rs = build_root_system(label)
    basis = m_lattice_basis(rs)
    assert len(basis) == rs.rank and det(basis) != 0
    th = tuple(c / rs.a0 for c in rs.theta_weight)
    assert m_contains(rs, th)
    s = tuple(a + 2 * b for a, b in zip(basis[0], basis[-1]))
    assert m_contains(rs, s)
    assert m_plus_contains(rs, rs.zero)


# -- t-action ---------------------------------------------------------------------


def test_translate_examples():
    a1 = build_root_system("A1^1")
    t = translate_affine_weight(a1, (2,), lambda0(a1))
    assert t == AffineWeight((2,), 1, -1)
    assert translate_affine_weight(a1, (2,), AffineWeight((2,), 0, 0)) == AffineWeight((2,), 0, -2)
    lam = AffineWeight((Fraction(3, 2),), 4, Fraction(1, 3))
    assert translate_affine_weight(a1, (0,), lam) == lam


def test_group_laws():
    a2 = build_root_system("A2^1")
    mu, nu = a2.simple_root(1), a2.root_to_weight((1, 1))
    T = AffineWeylElement.translation
    assert T(a2, mu) * T(a2, nu) == T(a2, tuple(a + b for a, b in zip(mu, nu)))
    s1 = AffineWeylElement(FiniteWeylElement.from_word(a2, [1]), a2.zero)
    assert s1 * T(a2, mu) * s1.inverse() == T(a2, tuple(-c for c in mu))
    a1 = build_root_system("A1^1")
    s0 = affine_simple_reflection(a1, 0)
    for c in [Fraction(-3), Fraction(1, 2), Fraction(7, 3)]:
        assert s0((c,)) == (2 - c,)
    s1 = affine_simple_reflection(a1, 1)
    assert s0 == T(a1, (2,)) * s1


# -- folding ----------------------------------------------------------------------


def test_fold_a1_examples():
    a1 = build_root_system("A1^1")
    c = fold_to_alcove(a1, lp(a1, Fraction(1, 2)))
    assert c.word == () and c.element == AffineWeylElement.translation(a1, (0,))
    c = fold_to_alcove(a1, lp(a1, Fraction(5, 2)))
    assert c.word == (0, 1)
    assert c.element == AffineWeylElement.translation(a1, (2,))
    assert c.mu_prime == (2,)
    c = fold_to_alcove(a1, lp(a1, 1))
    assert c.word == (0,)
    assert c.element == affine_simple_reflection(a1, 0)
    assert c.mu_prime == (2,)


def test_fold_needs_regular_eps():
    a2 = build_root_system("A2^1")
    with pytest.raises(PreconditionError):
        fold_to_alcove(a2, LexPoint((1, 1), (0, 0)))
    with pytest.raises(PreconditionError):
        fold_to_alcove(a2, LexPoint((1, 1), (1, -1)))


def test_separating_examples():
    a1 = build_root_system("A1^1")
    p = lp(a1, Fraction(1, 2))
    assert separating_count(a1, p, p) == 0
    assert separating_count(a1, p, lp(a1, Fraction(5, 2))) == 2
    assert separating_count(a1, p, lp(a1, Fraction(-1, 2))) == 1


def test_reduced_word_examples():
    a1 = build_root_system("A1^1")
    assert reduced_word_of(AffineWeylElement.translation(a1, (0,))) == ()
    assert reduced_word_of(AffineWeylElement.translation(a1, (2,))) == (0, 1)
    with pytest.raises(InvalidElementError):
        reduced_word_of(AffineWeylElement.translation(a1, (1,)))
    a2 = build_root_system("A2^1")
    v = AffineWeylElement.translation(a2, a2.root_to_weight((1, 1)))
    assert len(reduced_word_of(v)) == length(v) == 4


def in_alcove(rs, x):
    for cv in rs.positive_coroots:
        a = (sum(c * b for c, b in zip(cv, x.base)), sum(c * e for c, e in zip(cv, x.eps)))
        if not a > (0, 0):
            return False
    tc = rs.theta_coroot
    t = (sum(c * b for c, b in zip(tc, x.base)), sum(c * e for c, e in zip(tc, x.eps)))
    return t < (Fraction(1, rs.a0), 0)


@pytest.mark.parametrize("label", ["A2^1", "C2^1", "G2^1", "B3^1", "A2^2", "A4^2", "D4^3", "A5^2"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_fold_properties(label, data):
    rs = build_root_system(label)
    x = LexPoint(data.draw(st.tuples(*[fracs] * rs.rank)), rs.rho)
    cert = fold_to_alcove(rs, x)
    assert in_alcove(rs, cert.representative)
    assert cert.element(cert.representative) == x
    assert apply_affine_word(rs, cert.word, cert.representative) == x
    assert element_from_word(rs, cert.word) == cert.element
    assert len(cert.word) == separating_count(rs, interior_point(rs), x)
    assert length(cert.element) == len(cert.word)
    assert reduced_word_of(cert.element) == cert.word
    assert m_contains(rs, cert.mu_prime)
    assert closure_contains(rs, x, cert.mu_prime)
    # folding an already folded image again changes nothing
    assert fold_to_alcove(rs, cert.representative).word == ()


def test_record_shape():
    a1 = build_root_system("A1^1")
    rec = fold_to_alcove(a1, lp(a1, Fraction(5, 2))).to_record()
    assert rec == {"label": "A1^1", "word": [0, 1], "linear_word": [],
                   "transl_coords": ["1"], "mu_prime_coords": ["2"]}
