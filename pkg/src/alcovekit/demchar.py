"""Demazure characters of untwisted affine algebras and the identities they satisfy.

``D(l, lambda)`` is computed as ``D_{v} e^{Lambda}`` where ``Lambda`` and the
reduced word of ``v`` come from the Steinberg certificate of ``(l, -w0 lambda)``,
so that the cyclic extremal vector has weight ``l Lambda_0 + w0 lambda`` and
the classical character has highest weight ``lambda``.
Characters are exact integer polynomials; nothing here uses floating point.
"""

from __future__ import annotations

import json
import os
import tempfile
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import PreconditionError, UnsupportedError
from .rootsys import RootSystemData, as_weight, build_root_system, is_dominant, is_integral
from .steinberg import (
    WeightDecomposition,
    canonical_decomposition,
    steinberg_certificate,
    validate_decomposition,
)


class CharPoly:
    """Integer combination of ``e^{Lambda}`` over affine weights of one level.

    Terms are keyed by ``(classical, degree)`` with integer classical
    coordinates (fundamental weights) and integer delta-degree.
    """

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms=None):
        self.level = level
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, level, classical, degree=0):
        return cls(level, {(tuple(int(c) for c in classical), int(degree)): 1})

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.level == other.level and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"CharPoly(level={self.level}, {len(self.terms)} terms)"

    def top_degree(self):
        return max(d for _, d in self.terms)


def _check_untwisted(rs):
    if rs.label.twist != 1:
        raise UnsupportedError(f"Demazure characters are implemented for untwisted labels only, not {rs.label}")


def demazure_step(rs: RootSystemData, i: int, f: CharPoly) -> CharPoly:
    """Demazure operator ``D_i`` (``i = 0`` uses ``alpha_0 = delta - theta``)."""
    _check_untwisted(rs)
    if not 0 <= i <= rs.rank:
        raise ValueError(f"Demazure operator index {i} out of range 0..{rs.rank}")
    out = defaultdict(int)
    level = f.level
    if i == 0:
        tc, th = rs.theta_coroot, rs.theta_weight
        for (mu, d), c in f.terms.items():
            m = level - sum(a * b for a, b in zip(tc, mu))
            if m >= 0:
                for j in range(m + 1):
                    out[tuple(x + j * t for x, t in zip(mu, th)), d - j] += c
            elif m <= -2:
                for j in range(1, -m):
                    out[tuple(x - j * t for x, t in zip(mu, th)), d + j] -= c
    else:
        row = rs.cartan[i - 1]
        for (mu, d), c in f.terms.items():
            m = mu[i - 1]
            if m >= 0:
                for j in range(m + 1):
                    out[tuple(x - j * a for x, a in zip(mu, row)), d] += c
            elif m <= -2:
                for j in range(1, -m):
                    out[tuple(x + j * a for x, a in zip(mu, row)), d] -= c
    return CharPoly(level, out)


def apply_word_operators(rs: RootSystemData, word, f: CharPoly) -> CharPoly:
    """``D_{i1} ... D_{ik} f``; the last letter is applied first."""
    for i in reversed(word):
        f = demazure_step(rs, i, f)
    return f


# -- caching --------------------------------------------------------------------


class CharacterCache:
    """One JSON file per ``(label, level, lambda)``; writes are atomic renames."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def filename(label, level, lam) -> str:
        coords = "_".join(str(int(c)) for c in lam)
        return f"{str(label).replace('^', '-')}__l{level}__{coords}.json"

    def path(self, label, level, lam) -> Path:
        return self.directory / self.filename(label, level, lam)

    def get(self, rs, level, lam):
        p = self.path(rs.label, level, lam)
        if not p.exists():
            return None
        try:
            return record_to_char(json.loads(p.read_text()))[3]
        except (ValueError, KeyError, TypeError):
            return None

    def put(self, rs, level, lam, f: CharPoly):
        rec = char_to_record(rs, level, lam, f)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(rec, fh, sort_keys=True)
            os.replace(tmp, self.path(rs.label, level, lam))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def entries(self):
        return sorted(p for p in self.directory.glob("*.json") if not p.name.startswith(".tmp-"))

    def clear(self):
        for p in self.entries():
            p.unlink()


def char_to_record(rs, level, lam, f: CharPoly) -> dict:
    terms = [
        {"classical_coords": list(mu), "delta_deg_num": d, "delta_deg_den": 1, "mult": c}
        for (mu, d), c in sorted(f.terms.items())
    ]
    return {"label": str(rs.label), "level": level, "lambda_coords": [int(c) for c in lam], "terms": terms}


def record_to_char(rec: dict):
    """Return ``(rs, level, lambda, CharPoly)`` from a cache record."""
    rs = build_root_system(rec["label"])
    level = int(rec["level"])
    lam = tuple(int(c) for c in rec["lambda_coords"])
    terms = {}
    for t in rec["terms"]:
        deg = Fraction(int(t["delta_deg_num"]), int(t["delta_deg_den"]))
        if deg.denominator != 1 or len(t["classical_coords"]) != rs.rank:
            raise ValueError("malformed term")
        terms[tuple(int(c) for c in t["classical_coords"]), int(deg)] = int(t["mult"])
    return rs, level, lam, CharPoly(level, terms)


_memory: dict = {}


def _check_weight(rs, lam):
    lam = as_weight(lam)
    if len(lam) != rs.rank or not (is_integral(lam) and is_dominant(lam)):
        raise PreconditionError(f"lambda = {[str(c) for c in lam]} is not a dominant integral weight of {rs.finite_type}")
    return tuple(int(c) for c in lam)


def compute_demazure_character(rs: RootSystemData, level: int, lam) -> CharPoly:
    """Uncached ``D_{v} e^{Lambda}`` for ``D(level, lam)``."""
    _check_untwisted(rs)
    lam = _check_weight(rs, lam)
    dual = tuple(-int(c) for c in rs.w0.act(lam))
    cert = steinberg_certificate(rs, level, dual)
    Lam = cert.Lambda
    start = CharPoly.monomial(level, Lam.classical, Lam.degree)
    return apply_word_operators(rs, cert.v_D_word, start)


def demazure_character(rs: RootSystemData, level: int, lam, cache: CharacterCache | None = None) -> CharPoly:
    """Character of ``D(level, lam)``, memoised in-process and optionally on disk."""
    _check_untwisted(rs)
    lam = _check_weight(rs, lam)
    key = (str(rs.label), int(level), lam)
    hit = _memory.get(key)
    if hit is None and cache is not None:
        hit = cache.get(rs, level, lam)
    if hit is None:
        hit = compute_demazure_character(rs, level, lam)
    # an existing entry is never replaced here, even if it failed to load
    if cache is not None and not cache.path(rs.label, level, lam).exists():
        cache.put(rs, level, lam, hit)
    _memory[key] = hit
    return hit


# -- projections ----------------------------------------------------------------


def classical_character(f: CharPoly) -> dict:
    out = defaultdict(int)
    for (mu, _), c in f.terms.items():
        out[mu] += c
    return {k: v for k, v in out.items() if v}


def graded_classical_character(f: CharPoly) -> dict:
    """``{degree: {weight: mult}}``, degree measured up from the cyclic generator.

    The generating extremal vector has the smallest delta-degree in a
    Demazure character; it is placed at degree 0.
    """
    if not f.terms:
        return {}
    bottom = min(d for _, d in f.terms)
    out: dict = {}
    for (mu, d), c in f.terms.items():
        layer = out.setdefault(d - bottom, defaultdict(int))
        layer[mu] += c
    return {k: dict(v) for k, v in sorted(out.items())}


def dimension(f) -> int:
    if isinstance(f, CharPoly):
        return sum(f.terms.values())
    return sum(f.values())


def char_product(a: dict, b: dict) -> dict:
    out = defaultdict(int)
    for x, c in a.items():
        for y, d in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += c * d
    return {k: v for k, v in out.items() if v}


def char_sum(a: dict, b: dict) -> dict:
    out = defaultdict(int, a)
    for k, v in b.items():
        out[k] += v
    return {k: v for k, v in out.items() if v}


def grade_shift(g: dict, d: int) -> dict:
    if d < 0:
        raise ValueError("grade shifts must be nonnegative")
    return {k + d: dict(v) for k, v in g.items()}


def graded_sum(a: dict, b: dict) -> dict:
    out = {}
    for k in sorted(set(a) | set(b)):
        layer = char_sum(a.get(k, {}), b.get(k, {}))
        if layer:
            out[k] = layer
    return out


def weyl_dimension(rs: RootSystemData, lam) -> int:
    """``prod <lam + rho, a^vee> / <rho, a^vee>`` over positive roots."""
    lam = _check_weight(rs, lam)
    num = den = 1
    for cv in rs.positive_coroots:
        num *= sum(c * (x + 1) for c, x in zip(cv, lam))
        den *= sum(cv)
    return num // den


def highest_weight_check(rs: RootSystemData, lam, ch: dict) -> bool:
    """``lam`` occurs once and every weight of ``ch`` lies below it in dominance order."""
    lam = tuple(int(c) for c in lam)
    if ch.get(lam) != 1:
        return False
    for mu in ch:
        diff = rs.weight_to_root(tuple(a - b for a, b in zip(lam, mu)))
        if any(c < 0 or c.denominator != 1 for c in diff):
            return False
    return True


def format_character(ch: dict) -> str:
    if not ch:
        return "0"
    parts = []
    for mu, c in sorted(ch.items(), reverse=True):
        w = "e(" + ",".join(str(x) for x in mu) + ")"
        parts.append(w if c == 1 else f"{c}*{w}")
    return " + ".join(parts)


def format_graded(g: dict) -> str:
    """Polynomial in q whose coefficients are classical characters."""
    if not g:
        return "0"
    out = []
    for d, layer in sorted(g.items()):
        q = "" if d == 0 else ("q*" if d == 1 else f"q^{d}*")
        out.append(f"{q}({format_character(layer)})")
    return " + ".join(out)


# -- verification of the fusion and Q-system identities --------------------------


def _first_difference(a: dict, b: dict):
    for k in sorted(set(a) | set(b)):
        if a.get(k, 0) != b.get(k, 0):
            return k, a.get(k, 0), b.get(k, 0)
    return None


@dataclass
class FusionReport:
    ok: bool
    level: int
    lam: tuple
    factors: list  # (level, weight) pairs on the right-hand side
    lhs_dim: int
    factor_dims: list
    first_difference: tuple | None = None

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        rhs = "×".join(str(d) for d in self.factor_dims) or "1"
        status = "PASS" if self.ok else "FAIL"
        line = f"{status}: {self.lhs_dim} = {rhs}"
        if self.first_difference is not None:
            w, a, b = self.first_difference
            line += f"; first differing weight {list(w)}: {a} vs {b}"
        return line


def verify_fusion(rs: RootSystemData, level: int, lam, decomposition: WeightDecomposition | None = None,
                  cache: CharacterCache | None = None) -> FusionReport:
    """Compare ``ch D(l, lam)`` with the product over the fusion factors."""
    _check_untwisted(rs)
    lam = _check_weight(rs, lam)
    if decomposition is None:
        decomposition = canonical_decomposition(rs, level, lam)
    else:
        chk = validate_decomposition(rs, level, decomposition.parts, decomposition.remainder, lam)
        if not chk:
            raise PreconditionError(f"invalid decomposition: {chk.reason}")
    factors = [(level, tuple(int(level * c) for c in p)) for p in decomposition.parts]
    rem = tuple(int(c) for c in decomposition.remainder)
    if any(rem) or not factors:
        factors.append((level, rem))
    lhs = classical_character(demazure_character(rs, level, lam, cache))
    rhs = {tuple(0 for _ in lam): 1}
    dims = []
    for lev, mu in factors:
        ch = classical_character(demazure_character(rs, lev, mu, cache))
        dims.append(dimension(ch))
        rhs = char_product(rhs, ch)
    diff = _first_difference(lhs, rhs)
    return FusionReport(diff is None, level, lam, factors, dimension(lhs), dims, diff)


@dataclass
class QSystemReport:
    level: int
    lam: tuple
    node: int
    mu: tuple
    shift: int
    dims: dict = field(default_factory=dict)
    ungraded_ok: bool = False
    graded_ok: bool = False
    ungraded_difference: tuple | None = None
    graded_difference: tuple | None = None

    @property
    def ok(self):
        return self.ungraded_ok and self.graded_ok

    def summary(self) -> str:
        d = self.dims
        a = "PASS" if self.ungraded_ok else "FAIL"
        b = "PASS" if self.graded_ok else "FAIL"
        return (f"ungraded {a}: {d['middle']} = {d['sub']} + {d['quotient']}; "
                f"graded (shift {self.shift}) {b}")


def verify_qsystem(rs: RootSystemData, level: int, lam, i: int,
                   cache: CharacterCache | None = None) -> QSystemReport:
    """Check the character form of ``0 -> tau_d D(l, mu) -> D(l, lam + l w_i) -> D(l+1, lam + l w_i) -> 0``."""
    _check_untwisted(rs)
    if not rs.simply_laced:
        raise UnsupportedError("the Q-system identity is checked for simply-laced types only")
    lam = _check_weight(rs, lam)
    if not 1 <= i <= rs.rank:
        raise PreconditionError(f"node {i} out of range 1..{rs.rank}")
    if any(c > 1 for c in (cv[i - 1] for cv in rs.positive_coroots)):
        raise PreconditionError(f"omega_{i} is not minuscule")
    d = lam[i - 1]
    if d <= 0:
        raise PreconditionError(f"hypothesis lambda(alpha_{i}^vee) > 0 fails")
    top = max(sum(c * x for c, x in zip(cv, lam)) for cv in rs.positive_coroots)
    if level < top:
        raise PreconditionError(
            f"hypothesis l >= max{{lambda(alpha^vee)}} fails: l = {level} < {top}")
    row = rs.cartan[i - 1]
    mu = tuple(x + level * int(k == i - 1) - d * a for k, (x, a) in enumerate(zip(lam, row)))
    mid_w = tuple(x + level * int(k == i - 1) for k, x in enumerate(lam))
    sub = demazure_character(rs, level, mu, cache)
    mid = demazure_character(rs, level, mid_w, cache)
    quo = demazure_character(rs, level + 1, mid_w, cache)
    rep = QSystemReport(level, lam, i, mu, d)
    rep.dims = {"sub": dimension(sub), "middle": dimension(mid), "quotient": dimension(quo)}
    lhs = classical_character(mid)
    rhs = char_sum(classical_character(sub), classical_character(quo))
    rep.ungraded_difference = _first_difference(lhs, rhs)
    rep.ungraded_ok = rep.ungraded_difference is None
    g_lhs = graded_classical_character(mid)
    g_rhs = graded_sum(grade_shift(graded_classical_character(sub), d), graded_classical_character(quo))
    rep.graded_ok = g_lhs == g_rhs
    if not rep.graded_ok:
        for k in sorted(set(g_lhs) | set(g_rhs)):
            diff = _first_difference(g_lhs.get(k, {}), g_rhs.get(k, {}))
            if diff is not None:
                rep.graded_difference = (k,) + diff
                break
    return rep
