"""Steinberg certificates ``w t_mu (l Lambda_0 - lambda) in P+`` and weight decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .afweyl import (
    AffineWeight,
    LexPoint,
    act_linear,
    apply_affine_word,
    fold_to_alcove,
    interior_point,
    lambda0,
    m_contains,
    separating_count,
    translate_affine_weight,
)
from .errors import PreconditionError, UnsupportedError
from .rootsys import (
    FiniteWeylElement,
    RootSystemData,
    as_weight,
    build_root_system,
    inner_product,
    is_dominant,
    is_integral,
)


class Check:
    """Boolean verdict carrying a reason code when it fails."""

    __slots__ = ("ok", "reason")

    def __init__(self, ok: bool, reason: str = "ok"):
        self.ok = ok
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"Check({self.ok}, {self.reason!r})"


def _fmt(coords):
    return [str(c) for c in coords]


@dataclass(frozen=True, eq=False)
class SteinbergCertificate:
    rs: RootSystemData
    level: int
    lam: tuple
    mu: tuple
    w: FiniteWeylElement
    Lambda: AffineWeight
    v_D_word: tuple
    fold_word: tuple = ()

    def to_record(self) -> dict:
        return {
            "label": str(self.rs.label),
            "level": self.level,
            "lambda": _fmt(self.lam),
            "mu": _fmt(self.mu),
            "w_word": list(self.w.word),
            "Lambda": {
                "classical": _fmt(self.Lambda.classical),
                "level": self.Lambda.level,
                "degree": str(self.Lambda.degree),
            },
            "v_D_word": list(self.v_D_word),
        }

    @classmethod
    def from_record(cls, rec: dict) -> "SteinbergCertificate":
        rs = build_root_system(rec["label"])
        lam = rec["Lambda"]
        return cls(
            rs=rs,
            level=int(rec["level"]),
            lam=as_weight(rec["lambda"]),
            mu=as_weight(rec["mu"]),
            w=FiniteWeylElement.from_word(rs, tuple(rec["w_word"])),
            Lambda=AffineWeight(as_weight(lam["classical"]), int(lam["level"]), Fraction(lam["degree"])),
            v_D_word=tuple(rec["v_D_word"]),
        )


def _check_input(rs, level, lam):
    lam = as_weight(lam)
    if len(lam) != rs.rank:
        raise PreconditionError(f"{rs.label} needs {rs.rank} weight coordinates, got {len(lam)}")
    if not (is_integral(lam) and is_dominant(lam)):
        raise PreconditionError(f"lambda = {_fmt(lam)} is not dominant integral")
    if int(level) != level or level < 1:
        raise PreconditionError(f"level must be a positive integer, got {level}")
    return int(level), lam


def steinberg_certificate(rs: RootSystemData, level: int, lam: Sequence) -> SteinbergCertificate:
    """Find ``mu in M+`` and ``w`` with ``w t_mu (l Lambda_0 - lambda)`` dominant.

    Folds ``-w0(lambda)/l`` (perturbed by rho) into the fundamental alcove to
    get ``v = t_{mu'} u``, then ``mu = -w0 mu'`` and ``w = u^{-1} w0``.
    """
    level, lam = _check_input(rs, level, lam)
    w0 = rs.w0
    lam_dual = tuple(-c for c in w0.act(lam))
    cert = fold_to_alcove(rs, LexPoint(tuple(c / level for c in lam_dual), rs.rho))
    mu_p, u = cert.mu_prime, cert.u
    mu = tuple(-c for c in w0.act(mu_p))
    u_inv = u.inverse()
    w = u_inv * w0
    # w(l mu - lambda) = u^{-1}(lambda' - l mu')
    classical = u_inv.act(tuple(a - level * b for a, b in zip(lam_dual, mu_p)))
    degree = inner_product(rs, lam, mu) - inner_product(rs, mu, mu) * level / 2
    Lam = AffineWeight(classical, level, degree)
    return SteinbergCertificate(rs, level, lam, mu, w, Lam, tuple(rs.w0_word) + cert.word, cert.word)


def verify_certificate(rs: RootSystemData, cert: SteinbergCertificate) -> Check:
    """Recheck a certificate from the t-formula, independent of how it was found."""
    if cert.rs is not rs:
        return Check(False, "root system mismatch")
    level, lam, mu = cert.level, cert.lam, cert.mu
    if level < 1 or cert.Lambda.level != level:
        return Check(False, "level mismatch")
    if not m_contains(rs, mu):
        return Check(False, "mu not in M")
    if not is_dominant(mu):
        return Check(False, "mu not dominant")
    start = lambda0(rs, level) - AffineWeight(lam, 0, 0)
    Lam = act_linear(cert.w, translate_affine_weight(rs, mu, start))
    if not (is_integral(Lam.classical) and is_dominant(Lam.classical)):
        return Check(False, "not dominant")
    a0_value = level - rs.a0 * sum(c * x for c, x in zip(rs.theta_coroot, Lam.classical))
    if a0_value < 0:
        return Check(False, "alpha_0 pairing negative")
    if Lam != cert.Lambda:
        return Check(False, "Lambda mismatch")
    # (w t_mu)^{-1} = t_{-mu} w^{-1} sends 0 + eps*rho to -mu + eps*w^{-1}(rho)
    p0 = interior_point(rs)
    expected = LexPoint(tuple(-c for c in mu), cert.w.inverse().act(rs.rho))
    image = apply_affine_word(rs, cert.v_D_word, p0)
    if image != expected:
        return Check(False, "v_D word mismatch")
    if separating_count(rs, p0, image) != len(cert.v_D_word):
        return Check(False, "v_D word not reduced")
    return Check(True)


# -- weight decompositions ------------------------------------------------------


@dataclass(frozen=True)
class WeightDecomposition:
    level: int
    parts: tuple
    remainder: tuple

    @property
    def multiplicities(self):
        """For canonical decompositions: m_i = number of parts equal to omega_i."""
        n = len(self.remainder)
        m = [0] * n
        for p in self.parts:
            for i, c in enumerate(p):
                m[i] += int(c)
        return tuple(m)


def canonical_decomposition(rs: RootSystemData, level: int, lam: Sequence) -> WeightDecomposition:
    """``lambda = l * sum(m_i omega_i) + lambda_0`` with ``0 <= r_i < l`` (simply-laced)."""
    if not rs.simply_laced:
        raise UnsupportedError(
            f"canonical decomposition needs a simply-laced finite type, not {rs.finite_type}; "
            "pass explicit parts to validate_decomposition instead"
        )
    level, lam = _check_input(rs, level, lam)
    parts = []
    rem = []
    for i, c in enumerate(lam):
        q, r = divmod(int(c), level)
        parts.extend([rs.fundamental_weight(i + 1)] * q)
        rem.append(Fraction(r))
    return WeightDecomposition(level, tuple(parts), tuple(rem))


def validate_decomposition(rs: RootSystemData, level: int, parts, remainder, lam) -> Check:
    """Check ``lambda = l * sum(parts) + remainder`` with dominant coweight parts.

    A coweight ``x`` is viewed as the weight ``<x, .>``; it is integral when
    ``<x, alpha_j>`` is an integer for every simple root.
    """
    lam = as_weight(lam)
    remainder = as_weight(remainder)
    parts = [as_weight(p) for p in parts]
    total = list(remainder)
    for p in parts:
        total = [t + level * c for t, c in zip(total, p)]
    if tuple(total) != lam:
        return Check(False, "parts do not sum to lambda")
    if not (is_integral(remainder) and is_dominant(remainder)):
        return Check(False, "remainder not dominant integral")
    for p in parts:
        if not is_dominant(p):
            return Check(False, "part not dominant")
        pairings = [c * rs.root_norms[j] / 2 for j, c in enumerate(p)]
        if any(Fraction(x).denominator != 1 for x in pairings):
            return Check(False, "part not a coweight")
    return Check(True)


def decomposition_from_parts(rs: RootSystemData, level: int, lam, parts) -> WeightDecomposition:
    lam = as_weight(lam)
    parts = tuple(as_weight(p) for p in parts)
    rem = list(lam)
    for p in parts:
        rem = [r - level * c for r, c in zip(rem, p)]
    dec = WeightDecomposition(level, parts, tuple(rem))
    chk = validate_decomposition(rs, level, parts, dec.remainder, lam)
    if not chk:
        raise PreconditionError(f"invalid decomposition: {chk.reason}")
    return dec
