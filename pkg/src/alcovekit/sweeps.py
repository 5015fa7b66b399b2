"""Randomised invariant sweeps used by ``alcovekit selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .afweyl import (
    LexPoint,
    closure_contains,
    fold_to_alcove,
    interior_point,
    m_contains,
    separating_count,
)
from .rootsys import build_root_system, is_dominant
from .steinberg import steinberg_certificate, verify_certificate

SWEEP_LABELS = (
    "A1^1", "A2^1", "A3^1", "A4^1", "B3^1", "C3^1", "D4^1", "G2^1", "F4^1",
    "E6^1", "E7^1", "E8^1", "A2^2", "A4^2", "A5^2", "D5^2", "D4^3", "E6^2",
)


@dataclass
class SweepResult:
    name: str
    label: str
    cases: int
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name:<12} {self.label:<6} {self.cases - len(self.failures)}/{self.cases}"


def random_point(rng: random.Random, rank: int, lo=-30, hi=30, maxden=6):
    return tuple(Fraction(rng.randint(lo, hi), rng.randint(1, maxden)) for _ in range(rank))


def certificate_sweep(label: str, samples: int, rng: random.Random, max_level=5, max_coord=10):
    rs = build_root_system(label)
    res = SweepResult("certificate", label, samples)
    for _ in range(samples):
        level = rng.randint(1, max_level)
        lam = tuple(rng.randint(0, max_coord) for _ in range(rs.rank))
        chk = verify_certificate(rs, steinberg_certificate(rs, level, lam))
        if not chk:
            res.failures.append((level, lam, chk.reason))
    return res


def reduced_word_sweep(label: str, samples: int, rng: random.Random):
    """Fold word length equals the number of separating walls."""
    rs = build_root_system(label)
    res = SweepResult("reduced-word", label, samples)
    p0 = interior_point(rs)
    for _ in range(samples):
        x = LexPoint(random_point(rng, rs.rank), rs.rho)
        cert = fold_to_alcove(rs, x)
        if len(cert.word) != separating_count(rs, p0, x):
            res.failures.append(x.base)
    return res


def chamber_sweep(label: str, samples: int, rng: random.Random):
    """Dominant points fold into alcoves inside the fundamental chamber, with mu' in M+."""
    rs = build_root_system(label)
    res = SweepResult("chamber", label, samples)
    p0 = interior_point(rs)
    for _ in range(samples):
        x = LexPoint(random_point(rng, rs.rank, lo=0), rs.rho)
        cert = fold_to_alcove(rs, x)
        inner = cert.element(p0)
        in_chamber = all(
            (sum(c * b for c, b in zip(cv, inner.base)), sum(c * e for c, e in zip(cv, inner.eps))) > (0, 0)
            for cv in rs.positive_coroots
        )
        mu = cert.mu_prime
        if not (in_chamber and m_contains(rs, mu) and is_dominant(mu) and closure_contains(rs, x, mu)):
            res.failures.append(x.base)
    return res


SWEEPS = {
    "certificate": certificate_sweep,
    "reduced-word": reduced_word_sweep,
    "chamber": chamber_sweep,
}


def run_sweep(name: str, label: str, samples: int, seed: int) -> SweepResult:
    # one generator per (sweep, label) keeps results independent of scheduling
    rng = random.Random(f"{seed}:{name}:{label}")
    return SWEEPS[name](label, samples, rng)
