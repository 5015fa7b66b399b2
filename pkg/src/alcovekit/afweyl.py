"""Affine Weyl group ``W = W0 x| t_M`` acting on the real span of finite weights.

Points of the alcove model are :class:`LexPoint` values ``base + eps * epsilon``
with an infinitesimal ``epsilon``; comparing pairings lexicographically
decides on which side of every wall such a point lies, so folding never has
to break ties by hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidElementError, PreconditionError
from .rootsys import (
    FiniteWeylElement,
    RootSystemData,
    as_weight,
    fold_to_dominant,
    inner_product,
    is_dominant,
)


@dataclass(frozen=True)
class LexPoint:
    base: tuple
    eps: tuple

    @classmethod
    def make(cls, base, eps):
        return cls(as_weight(base), as_weight(eps))


@dataclass(frozen=True)
class AffineWeight:
    """``classical + level * Lambda_0 + degree * delta``."""

    classical: tuple
    level: int
    degree: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "classical", as_weight(self.classical))
        object.__setattr__(self, "degree", Fraction(self.degree))

    def __add__(self, other):
        return AffineWeight(tuple(a + b for a, b in zip(self.classical, other.classical)),
                            self.level + other.level, self.degree + other.degree)

    def __sub__(self, other):
        return AffineWeight(tuple(a - b for a, b in zip(self.classical, other.classical)),
                            self.level - other.level, self.degree - other.degree)


def lambda0(rs: RootSystemData, level: int = 1) -> AffineWeight:
    return AffineWeight(rs.zero, level, 0)


# -- hyperplanes and the lattice M ------------------------------------------------


@lru_cache(maxsize=None)
def _moduli(rs: RootSystemData) -> tuple:
    return tuple(z_alpha_modulus(rs, r) for r in rs.positive_roots)


def z_alpha_modulus(rs: RootSystemData, alpha: Sequence[int]) -> Fraction:
    """Positive ``m`` with ``Z_alpha = m Z`` for the root ``alpha`` (root coordinates)."""
    alpha = tuple(alpha)
    neg = tuple(-c for c in alpha)
    if alpha not in rs.positive_roots and neg not in rs.positive_roots:
        raise ValueError(f"{alpha} is not a root of {rs.finite_type}")
    long = rs.is_long(alpha)
    if rs.label.twist == 1:
        if long:
            return Fraction(1)
        return rs.max_norm / min(rs.root_norms)
    if rs.a0 == 2 and long:
        return Fraction(1, 2)
    return Fraction(1)


def _hnf(rows):
    """Row-style Hermite normal form of an integer matrix (zero rows dropped)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    r0 = 0
    for col in range(ncols):
        # gcd-eliminate column col among rows r0..
        while True:
            nz = [i for i in range(r0, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r0], rows[piv] = rows[piv], rows[r0]
            done = True
            for i in range(r0 + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // rows[r0][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r0])]
                    if rows[i][col]:
                        done = False
            if done:
                break
        if r0 < len(rows) and rows[r0][col] != 0:
            if rows[r0][col] < 0:
                rows[r0] = [-a for a in rows[r0]]
            p = rows[r0][col]
            for i in range(r0):
                q = rows[i][col] // p
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r0])]
            out.append(col)
            r0 += 1
    return [tuple(r) for r in rows[:r0]]


@lru_cache(maxsize=None)
def _m_hnf(rs: RootSystemData):
    n = rs.rank
    start = tuple(Fraction(c, rs.a0) for c in rs.theta)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                p = sum(beta[j] * rs.cartan[j][i] for j in range(n))
                if p:
                    gamma = tuple(b - p * int(j == i) for j, b in enumerate(beta))
                    if gamma not in orbit:
                        orbit.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    rows = [tuple(int(c * rs.a0) for c in v) for v in sorted(orbit)]
    return tuple(_hnf(rows))


def m_lattice_basis(rs: RootSystemData) -> list:
    """Z-basis of M (weights), from the Hermite normal form of the orbit of theta/a0."""
    return [rs.root_to_weight(tuple(Fraction(c, rs.a0) for c in row)) for row in _m_hnf(rs)]


def m_contains(rs: RootSystemData, nu: Sequence) -> bool:
    r = [c * rs.a0 for c in rs.weight_to_root(as_weight(nu))]
    if any(c.denominator != 1 for c in r):
        return False
    v = [int(c) for c in r]
    for row in _m_hnf(rs):
        col = next(k for k, c in enumerate(row) if c)
        q, rem = divmod(v[col], row[col])
        if rem:
            return False
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def m_plus_contains(rs: RootSystemData, nu: Sequence) -> bool:
    return m_contains(rs, nu) and is_dominant(nu)


# -- the t-action on affine weights ---------------------------------------------


def translate_affine_weight(rs: RootSystemData, alpha: Sequence, lam: AffineWeight) -> AffineWeight:
    """``t_alpha(Lambda) = Lambda + Lambda(c) alpha - (<Lambda, alpha> + <alpha, alpha>/2 Lambda(c)) delta``."""
    alpha = as_weight(alpha)
    lev = lam.level
    shift = inner_product(rs, lam.classical, alpha) + inner_product(rs, alpha, alpha) / 2 * lev
    classical = tuple(x + lev * a for x, a in zip(lam.classical, alpha))
    return AffineWeight(classical, lev, lam.degree - shift)


def act_linear(w: FiniteWeylElement, lam: AffineWeight) -> AffineWeight:
    """Finite Weyl group action; Lambda_0 and delta are fixed."""
    return AffineWeight(w.act(lam.classical), lam.level, lam.degree)


# -- affine Weyl group elements -------------------------------------------------


class AffineWeylElement:
    """``t_nu u`` acting by ``x -> u(x) + nu``; ``transl`` is a weight."""

    __slots__ = ("rs", "linear", "transl")

    def __init__(self, linear: FiniteWeylElement, transl):
        self.rs = linear.rs
        self.linear = linear
        self.transl = as_weight(transl)

    @classmethod
    def translation(cls, rs, nu):
        return cls(rs.identity, nu)

    def __mul__(self, other):
        return affine_compose(self, other)

    def inverse(self):
        return affine_inverse(self)

    def __call__(self, x):
        if isinstance(x, LexPoint):
            return affine_act_point(self, x)
        return tuple(a + b for a, b in zip(self.linear.act(as_weight(x)), self.transl))

    def __eq__(self, other):
        return (isinstance(other, AffineWeylElement) and self.linear == other.linear
                and self.transl == other.transl)

    def __hash__(self):
        return hash((self.linear, self.transl))

    def __repr__(self):
        t = ",".join(str(c) for c in self.transl)
        return f"AffineWeylElement(t=({t}), u={list(self.linear.word)})"


def affine_compose(a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    if a.rs is not b.rs:
        raise ValueError("affine Weyl group elements of different root systems")
    shifted = a.linear.act(b.transl)
    return AffineWeylElement(a.linear * b.linear, tuple(x + y for x, y in zip(shifted, a.transl)))


def affine_inverse(a: AffineWeylElement) -> AffineWeylElement:
    inv = a.linear.inverse()
    return AffineWeylElement(inv, tuple(-c for c in inv.act(a.transl)))


def affine_act_point(a: AffineWeylElement, x: LexPoint) -> LexPoint:
    if len(x.base) != a.rs.rank:
        raise ValueError("point and element live in different root systems")
    base = tuple(p + q for p, q in zip(a.linear.act(x.base), a.transl))
    return LexPoint(base, a.linear.act(x.eps))


def affine_simple_reflection(rs: RootSystemData, i: int) -> AffineWeylElement:
    """``s_i``; ``s_0`` is the reflection in the wall ``x(theta^vee) = 1/a0``."""
    if i == 0:
        n = rs.rank
        th, tc = rs.theta_weight, rs.theta_coroot
        m = tuple(tuple(int(r == c) - th[r] * tc[c] for c in range(n)) for r in range(n))
        s_theta = FiniteWeylElement(rs, m)
        return AffineWeylElement(s_theta, tuple(Fraction(c, rs.a0) for c in th))
    return AffineWeylElement(FiniteWeylElement.from_word(rs, (i,)), rs.zero)


def interior_point(rs: RootSystemData) -> LexPoint:
    """``0 + epsilon * rho``, a point of the open fundamental alcove."""
    return LexPoint(rs.zero, rs.rho)


# -- folding --------------------------------------------------------------------


def _lcm_den(values):
    d = 1
    for v in values:
        d = d * v.denominator // math.gcd(d, v.denominator)
    return d


def is_regular(rs: RootSystemData, eps: Sequence) -> bool:
    d = _lcm_den(Fraction(e) for e in eps)
    ints = [int(e * d) for e in eps]
    return all(sum(c * e for c, e in zip(cv, ints)) != 0 for cv in rs.positive_coroots)


class _Scaled:
    """Integer image of a LexPoint: ``base = B / D``, ``eps = E / F``."""

    __slots__ = ("rs", "B", "E", "D", "F", "wall0")

    def __init__(self, rs, x: LexPoint, extra_den=1):
        self.rs = rs
        self.D = _lcm_den(x.base) * rs.a0 * extra_den
        self.F = _lcm_den(x.eps)
        self.B = [int(c * self.D) for c in x.base]
        self.E = [int(c * self.F) for c in x.eps]
        self.wall0 = self.D // rs.a0

    def reflect(self, i):
        rs = self.rs
        B, E = self.B, self.E
        if i == 0:
            tc, th = rs.theta_coroot, rs.theta_weight
            cb = sum(a * b for a, b in zip(tc, B)) - self.wall0
            ce = sum(a * b for a, b in zip(tc, E))
        else:
            th = rs.cartan[i - 1]
            cb, ce = B[i - 1], E[i - 1]
        if cb:
            for k, a in enumerate(th):
                if a:
                    B[k] -= cb * a
        if ce:
            for k, a in enumerate(th):
                if a:
                    E[k] -= ce * a

    def violated_wall(self):
        B, E = self.B, self.E
        for i in range(len(B)):
            b = B[i]
            if b < 0 or (b == 0 and E[i] < 0):
                return i + 1
        tc = self.rs.theta_coroot
        tb = sum(a * b for a, b in zip(tc, B))
        if tb > self.wall0:
            return 0
        if tb == self.wall0 and sum(a * b for a, b in zip(tc, E)) > 0:
            return 0
        return None

    def point(self):
        return LexPoint(tuple(Fraction(b, self.D) for b in self.B),
                        tuple(Fraction(e, self.F) for e in self.E))


def _element_mapping(rs, src: LexPoint, dst: LexPoint) -> AffineWeylElement:
    """The unique element sending the regular point ``src`` to ``dst``."""
    w1, e1 = fold_to_dominant(rs, dst.eps)
    w2, e2 = fold_to_dominant(rs, src.eps)
    if e1 != e2:
        raise ValueError("points are not W-related")
    u = w1 * w2.inverse()
    ub = u.act(src.base)
    return AffineWeylElement(u, tuple(a - b for a, b in zip(dst.base, ub)))


@dataclass(frozen=True, eq=False)
class AlcoveCertificate:
    """Result of folding ``point`` into the fundamental alcove.

    ``element`` (``v = t_{mu'} u``) maps the fundamental alcove onto the alcove
    containing ``point``; ``word`` is a reduced word for it.
    """

    word: tuple
    element: AffineWeylElement
    representative: LexPoint
    point: LexPoint

    @property
    def mu_prime(self):
        return self.element.transl

    @property
    def u(self):
        return self.element.linear

    def to_record(self) -> dict:
        rs = self.element.rs
        return {
            "label": str(rs.label),
            "word": list(self.word),
            "linear_word": list(self.u.word),
            "transl_coords": [str(c) for c in rs.weight_to_root(self.element.transl)],
            "mu_prime_coords": [str(c) for c in self.mu_prime],
        }


def fold_to_alcove(rs: RootSystemData, x: LexPoint) -> AlcoveCertificate:
    """Fold a regular point into the fundamental alcove, recording the walls crossed.

    At each step the smallest violated finite wall is used, and wall 0 only
    when no finite wall is violated.  The recorded word ``[j1, ..., jk]``
    satisfies ``x in s_j1 ... s_jk (A)``.
    """
    if len(x.base) != rs.rank or len(x.eps) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates for {rs.label}")
    if not is_regular(rs, x.eps):
        raise PreconditionError("eps must pair nonzero with every root (e.g. eps = rho)")
    s = _Scaled(rs, x)
    word = []
    while True:
        i = s.violated_wall()
        if i is None:
            break
        s.reflect(i)
        word.append(i)
    rep = s.point()
    v = _element_mapping(rs, rep, x)
    return AlcoveCertificate(tuple(word), v, rep, x)


def apply_affine_word(rs: RootSystemData, word: Sequence[int], x: LexPoint) -> LexPoint:
    """``s_{i1} ... s_{ik}(x)``, letters 0..n, the last letter acting first."""
    s = _Scaled(rs, x)
    for i in reversed(word):
        if not 0 <= i <= rs.rank:
            raise ValueError(f"affine reflection index {i} out of range 0..{rs.rank}")
        s.reflect(i)
    return s.point()


def element_from_word(rs: RootSystemData, word: Sequence[int]) -> AffineWeylElement:
    p0 = interior_point(rs)
    return _element_mapping(rs, p0, apply_affine_word(rs, word, p0))


def _lex_pair(cv, x: LexPoint):
    return (sum(c * b for c, b in zip(cv, x.base)), sum(c * e for c, e in zip(cv, x.eps)))


def _below(pair, m):
    """Largest j with (j*m, 0) < pair lexicographically; pair[1] != 0."""
    q = pair[0] / m
    f = math.floor(q)
    if f == q and pair[1] < 0:
        return f - 1
    return f


def _walls_below(rs, x: LexPoint):
    """``_below`` for every positive root, in integer arithmetic."""
    s = _Scaled(rs, x)
    out = []
    for m, cv in zip(_moduli(rs), rs.positive_coroots):
        b = sum(c * v for c, v in zip(cv, s.B))
        e = sum(c * v for c, v in zip(cv, s.E))
        # floor(b / (D m)) with an exact-hit correction
        q, r = divmod(b * m.denominator, s.D * m.numerator)
        out.append(q - 1 if r == 0 and e < 0 else q)
    return out


def separating_count(rs: RootSystemData, p: LexPoint, q: LexPoint) -> int:
    """Number of walls ``H_{alpha^vee, k}``, ``k in Z_alpha``, strictly separating p and q."""
    if not (is_regular(rs, p.eps) and is_regular(rs, q.eps)):
        raise PreconditionError("separating_count needs regular points")
    return sum(abs(a - b) for a, b in zip(_walls_below(rs, p), _walls_below(rs, q)))


def closure_contains(rs: RootSystemData, x: LexPoint, y: Sequence) -> bool:
    """Whether the plain point ``y`` lies in the closed alcove containing regular ``x``."""
    y = as_weight(y)
    for m, cv in zip(_moduli(rs), rs.positive_coroots):
        a = _lex_pair(cv, x)
        b = sum(c * v for c, v in zip(cv, y))
        # y may sit on a wall but not beyond one
        if (b, 0) > a:
            if _below((b, -1), m) != _below(a, m):
                return False
        elif _below((b, 1), m) != _below(a, m):
            return False
    return True


def reduced_word_of(v: AffineWeylElement) -> tuple:
    """Reduced word of ``v``, read off by folding ``v`` applied to an interior point."""
    if not m_contains(v.rs, v.transl):
        raise InvalidElementError(f"translation {v.transl} is not in M")
    return fold_to_alcove(v.rs, v(interior_point(v.rs))).word


def length(v: AffineWeylElement) -> int:
    """Length of ``v`` via the hyperplane count (independent of any word)."""
    p = interior_point(v.rs)
    return separating_count(v.rs, p, v(p))
