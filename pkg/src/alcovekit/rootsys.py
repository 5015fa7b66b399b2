"""Finite root systems attached to affine Cartan labels.

Weights are tuples of :class:`~fractions.Fraction` in the fundamental-weight
basis; roots are integer tuples in the simple-root basis.  Nodes follow the
Bourbaki numbering of the finite type and are written 1..n in words and at
the interfaces (0-based internally).

The Cartan matrix is stored with ``cartan[i][j] = <alpha_i, alpha_j^vee>``,
so row ``i`` is the simple root ``alpha_i`` written in fundamental weights.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import LabelError

Weight = tuple  # tuple[Fraction, ...] in the fundamental-weight basis
Root = tuple  # tuple[int, ...] in the simple-root basis

_LABEL_RE = re.compile(r"^([A-Za-z]+)(\d+)\^(\d+)$")


@dataclass(frozen=True)
class AffineLabel:
    series: str
    rank: int
    twist: int

    def __str__(self):
        return f"{self.series}{self.rank}^{self.twist}"

    @classmethod
    def parse(cls, text: str) -> "AffineLabel":
        text = text.strip()
        m = _LABEL_RE.match(text)
        if m is None:
            raise LabelError(f"cannot parse affine label {text!r}; expected 'Xn^r'", text)
        series, rank, twist = m.group(1), int(m.group(2)), int(m.group(3))
        if series not in "ABCDEFG" or len(series) != 1:
            raise LabelError(f"unknown series {series!r} in label {text!r}", series)
        if twist not in (1, 2, 3):
            raise LabelError(f"twist must be 1, 2 or 3, got {twist!r} in {text!r}", str(twist))
        label = cls(series, rank, twist)
        try:
            _finite_part(label)
        except KeyError:
            raise LabelError(
                f"{text!r} is not an affine type in Kac's tables Aff 1-3", text
            ) from None
        return label


def _finite_part(label: AffineLabel):
    """Return ``(finite series, finite rank, a0, theta kind)`` or raise KeyError."""
    s, n, r = label.series, label.rank, label.twist
    if r == 1:
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[s]
        if not ok:
            raise KeyError(label)
        return s, n, 1, "long"
    if r == 2:
        if s == "A" and n % 2 == 0 and n >= 2:
            k = n // 2
            return ("A", 1, 2, "long") if k == 1 else ("C", k, 2, "long")
        if s == "A" and n % 2 == 1 and n >= 5:
            return "C", (n + 1) // 2, 1, "short"
        if s == "D" and n >= 3:
            return "B", n - 1, 1, "short"
        if s == "E" and n == 6:
            return "F", 4, 1, "short"
        raise KeyError(label)
    if r == 3 and s == "D" and n == 4:
        return "G", 2, 1, "short"
    raise KeyError(label)


def _dynkin(series: str, n: int):
    """Relative squared root lengths and edges of a finite Dynkin diagram."""
    norms = [2] * n
    edges = [(i, i + 1) for i in range(n - 1)]
    if series == "B":
        norms[n - 1] = 1
    elif series == "C":
        norms = [1] * (n - 1) + [2]
    elif series == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif series == "F":
        norms = [2, 2, 1, 1]
    elif series == "G":
        norms = [1, 3]
    return norms, edges


def _invert(matrix):
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """Immutable root datum of the finite part of an affine label."""

    label: AffineLabel
    finite_type: str
    rank: int
    cartan: tuple
    root_norms: tuple  # <alpha_i, alpha_i>, with <theta, theta> = 2
    symmetrizers: tuple  # d_i = 2 / <alpha_i, alpha_i>
    positive_roots: tuple
    theta: Root
    a0: int
    inv_cartan: tuple

    def __repr__(self):
        return f"RootSystemData({self.label}, finite_type={self.finite_type})"

    @property
    def rho(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.rank))

    @property
    def zero(self) -> Weight:
        return tuple(Fraction(0) for _ in range(self.rank))

    def simple_root(self, i: int) -> tuple:
        """Simple root alpha_i (1-based) in fundamental-weight coordinates."""
        return self.cartan[i - 1]

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(Fraction(int(j == i - 1)) for j in range(self.rank))

    def root_to_weight(self, r: Sequence) -> Weight:
        n = self.rank
        return tuple(Fraction(sum(r[i] * self.cartan[i][j] for i in range(n))) for j in range(n))

    def weight_to_root(self, x: Sequence) -> tuple:
        n = self.rank
        return tuple(sum(Fraction(x[i]) * self.inv_cartan[i][j] for i in range(n)) for j in range(n))

    def coroot(self, r: Sequence) -> tuple:
        """Coefficients of alpha^vee in the simple coroots."""
        norm = root_norm(self, r)
        if norm == 0:
            raise ValueError("the zero vector has no coroot")
        return tuple(Fraction(r[k]) * self.root_norms[k] / norm for k in range(self.rank))

    def is_long(self, r: Sequence) -> bool:
        r = tuple(r)
        norm = self._norms.get(r)
        if norm is None:
            norm = root_norm(self, r)
        return norm == self.max_norm

    @cached_property
    def _norms(self) -> dict:
        table = {}
        for r in self.positive_roots:
            table[r] = table[tuple(-c for c in r)] = root_norm(self, r)
        return table

    @cached_property
    def max_norm(self) -> Fraction:
        return max(self.root_norms)

    @cached_property
    def theta_weight(self) -> tuple:
        return tuple(int(c) for c in self.root_to_weight(self.theta))

    @cached_property
    def theta_coroot(self) -> tuple:
        return tuple(int(c) for c in self.coroot(self.theta))

    @cached_property
    def positive_coroots(self) -> tuple:
        return tuple(tuple(int(c) for c in self.coroot(r)) for r in self.positive_roots)

    @cached_property
    def w0_word(self) -> tuple:
        w, _ = fold_to_dominant(self, tuple(-c for c in self.rho))
        return w.word

    @cached_property
    def w0(self) -> "FiniteWeylElement":
        return FiniteWeylElement.from_word(self, self.w0_word)

    @cached_property
    def identity(self) -> "FiniteWeylElement":
        return FiniteWeylElement.from_word(self, ())

    @property
    def simply_laced(self) -> bool:
        return self.finite_type[0] in "ADE"


def root_norm(rs: RootSystemData, r: Sequence) -> Fraction:
    """<r, r> for a vector given in simple-root coordinates."""
    return inner_product(rs, rs.root_to_weight(r), rs.root_to_weight(r))


def _positive_roots(cartan, n):
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                p = sum(beta[j] * cartan[j][i] for j in range(n))
                gamma = tuple(b - p * int(j == i) for j, b in enumerate(beta))
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    pos = [r for r in seen if all(c >= 0 for c in r)]
    return tuple(sorted(pos, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def _build(label: AffineLabel) -> RootSystemData:
    series, n, a0, kind = _finite_part(label)
    norms, edges = _dynkin(series, n)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = Fraction(norms[i])
    for i, j in edges:
        gram[i][j] = gram[j][i] = -Fraction(max(norms[i], norms[j]), 2)
    cartan = tuple(tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n))
    pos = _positive_roots(cartan, n)

    def norm(r):
        return sum(r[i] * r[j] * gram[i][j] for i in range(n) for j in range(n))

    if kind == "long":
        theta = pos[-1]
    else:
        shortest = min(norm(r) for r in pos)
        theta = [r for r in pos if norm(r) == shortest][-1]
    scale = 2 / norm(theta)
    root_norms = tuple(gram[i][i] * scale for i in range(n))
    return RootSystemData(
        label=label,
        finite_type=f"{series}{n}",
        rank=n,
        cartan=cartan,
        root_norms=root_norms,
        symmetrizers=tuple(2 / x for x in root_norms),
        positive_roots=pos,
        theta=theta,
        a0=a0,
        inv_cartan=_invert(cartan),
    )


def build_root_system(label) -> RootSystemData:
    """Root datum for an affine label such as ``"E6^2"`` (cached per label).

    Untwisted and ``A_{2n}^(2)`` labels take ``theta`` to be the highest
    root of the finite part; the other twisted labels take the highest short
    root, i.e. ``delta - alpha_0``.  The form is normalised by
    ``<theta, theta> = 2`` in every case.
    """
    if isinstance(label, str):
        label = AffineLabel.parse(label)
    return _build(label)


def as_weight(coords) -> Weight:
    if isinstance(coords, str):
        coords = [c for c in coords.split(",") if c.strip()]
    return tuple(Fraction(c.strip()) if isinstance(c, str) else Fraction(c) for c in coords)


def _check_dim(rs, *vectors):
    for v in vectors:
        if len(v) != rs.rank:
            raise ValueError(f"expected {rs.rank} coordinates for {rs.label}, got {len(v)}")


def inner_product(rs: RootSystemData, x: Sequence, y: Sequence) -> Fraction:
    """Invariant form on weights, normalised by <theta, theta> = 2."""
    _check_dim(rs, x, y)
    yr = rs.weight_to_root(y)
    return sum(Fraction(x[j]) * rs.root_norms[j] / 2 * yr[j] for j in range(rs.rank))


def coroot_pairing(rs: RootSystemData, lam: Sequence, alpha: Sequence) -> Fraction:
    """``lam(alpha^vee)`` for a weight ``lam`` and a root ``alpha`` in root coordinates."""
    _check_dim(rs, lam, alpha)
    if not any(alpha):
        raise ValueError("coroot pairing with the zero root is undefined")
    c = rs.coroot(alpha)
    return sum(ci * Fraction(x) for ci, x in zip(c, lam))


def is_dominant(x: Sequence) -> bool:
    return all(c >= 0 for c in x)


def is_integral(x: Sequence) -> bool:
    return all(Fraction(c).denominator == 1 for c in x)


def reflect(rs: RootSystemData, i: int, x: Sequence) -> tuple:
    """Simple reflection s_i (1-based) on a weight."""
    row = rs.cartan[i - 1]
    c = x[i - 1]
    return tuple(xk - c * ak for xk, ak in zip(x, row))


def apply_word(rs: RootSystemData, word: Sequence[int], x: Sequence) -> Weight:
    """Apply ``s_{i1} s_{i2} ... s_{ik}`` to ``x`` (the last letter acts first)."""
    _check_dim(rs, x)
    x = tuple(Fraction(c) for c in x)
    for i in reversed(word):
        if not 1 <= i <= rs.rank:
            raise ValueError(
                f"simple reflection index {i} out of range 1..{rs.rank}; "
                "the affine reflection s_0 lives in afweyl"
            )
        x = reflect(rs, i, x)
    return x


class FiniteWeylElement:
    """Element of the finite Weyl group, stored as an integer matrix on weights.

    ``matrix`` acts on column vectors of fundamental-weight coordinates.
    Equality is equality of matrices, which is the same as equality of the
    images of rho.  ``word`` is the reduced word read off by folding ``w(rho)``.
    """

    __slots__ = ("rs", "matrix", "_word")

    def __init__(self, rs, matrix, word=None):
        self.rs = rs
        self.matrix = matrix
        self._word = word

    @classmethod
    def from_word(cls, rs, word):
        n = rs.rank
        cols = [[int(r == c) for r in range(n)] for c in range(n)]  # cols[c][r] = M[r][c]
        for i in word:
            if not 1 <= i <= n:
                raise ValueError(f"simple reflection index {i} out of range 1..{n}")
            row = rs.cartan[i - 1]
            new = list(cols[i - 1])
            for k in range(n):
                if row[k]:
                    ck = cols[k]
                    for r in range(n):
                        new[r] -= row[k] * ck[r]
            cols[i - 1] = new
        matrix = tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))
        return cls(rs, matrix)

    @classmethod
    def from_image_of_rho(cls, rs, image):
        w, dom = fold_to_dominant(rs, image)
        if tuple(dom) != rs.rho:
            raise ValueError("image is not in the W-orbit of rho")
        return w

    @property
    def word(self) -> tuple:
        if self._word is None:
            w, _ = fold_to_dominant(self.rs, self.act(self.rs.rho))
            self._word = w._word
        return self._word

    def __len__(self):
        return len(self.word)

    def act(self, x):
        return tuple(sum(m * xj for m, xj in zip(row, x)) for row in self.matrix)

    def __mul__(self, other):
        if other.rs is not self.rs:
            raise ValueError("Weyl group elements of different root systems")
        n = self.rs.rank
        a, b = self.matrix, other.matrix
        m = tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
                  for r in range(n))
        return FiniteWeylElement(self.rs, m)

    def inverse(self):
        return FiniteWeylElement.from_word(self.rs, tuple(reversed(self.word)))

    def __eq__(self, other):
        return (isinstance(other, FiniteWeylElement) and other.rs is self.rs
                and other.matrix == self.matrix)

    def __hash__(self):
        return hash((str(self.rs.label), self.matrix))

    def __repr__(self):
        return f"FiniteWeylElement({list(self.word)})"


def fold_to_dominant(rs: RootSystemData, x: Sequence):
    """Return ``(w, x_plus)`` with ``x_plus`` dominant and ``w(x_plus) = x``.

    Always reflects at the smallest index with a negative coordinate, so the
    result is deterministic; the recorded word is reduced.
    """
    _check_dim(rs, x)
    y = tuple(Fraction(c) for c in x)
    if all(c.denominator == 1 for c in y):
        y = tuple(int(c) for c in y)
    word = []
    while True:
        i = next((k for k, c in enumerate(y) if c < 0), None)
        if i is None:
            break
        y = reflect(rs, i + 1, y)
        word.append(i + 1)
    word = tuple(word)
    y = tuple(Fraction(c) for c in y)
    w = FiniteWeylElement.from_word(rs, word)
    w._word = word
    return w, y
