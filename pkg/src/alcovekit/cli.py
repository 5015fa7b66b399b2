"""Command-line frontend: ``python -m alcovekit <subcommand> ...``.

Exit status is 0 when everything checked passes, 1 on a verification
failure and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .afweyl import LexPoint, fold_to_alcove, interior_point, separating_count
from .demchar import (
    CharacterCache,
    classical_character,
    compute_demazure_character,
    demazure_character,
    dimension,
    format_character,
    format_graded,
    graded_classical_character,
    highest_weight_check,
    char_to_record,
    record_to_char,
    verify_fusion,
    verify_qsystem,
)
from .errors import InvalidElementError, LabelError, PreconditionError, UnsupportedError
from .rootsys import as_weight, build_root_system
from .steinberg import (
    SteinbergCertificate,
    canonical_decomposition,
    decomposition_from_parts,
    steinberg_certificate,
    verify_certificate,
)
from .sweeps import SWEEP_LABELS, SWEEPS, run_sweep

CACHE_ENV = "ALCOVEKIT_CACHE"

NODE_HELP = """\
Weights are given in fundamental-weight coordinates, comma separated, in the
Bourbaki node order of the finite part:
  A_n  1-2-...-n
  B_n  1-2-...-(n-1)=>n      (alpha_n short)
  C_n  1-2-...-(n-1)<=n      (alpha_n long)
  D_n  1-2-...-(n-2) with n-1 and n attached to n-2
  E_n  1-3-4-5-...-n with 2 attached to 4
  F_4  1-2=>3-4              (alpha_1, alpha_2 long)
  G_2  1<=2                  (alpha_1 short)
Finite parts of twisted labels: A2n^2 -> C_n (A2^2 -> A_1), A(2n-1)^2 -> C_n,
D(n+1)^2 -> B_n, E6^2 -> F_4, D4^3 -> G_2.
Coordinates starting with a minus sign need the = form: --point=-1/2,3.
"""


class UsageError(Exception):
    pass


def _coords(text):
    try:
        return as_weight(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse coordinates {text!r}") from None


def _parts(text):
    if not text:
        return []
    return [_coords(chunk) for chunk in text.split(";") if chunk.strip()]


def _rs(args):
    return build_root_system(args.algebra)


def _weight(rs, args):
    lam = _coords(args.weight)
    if len(lam) != rs.rank:
        raise UsageError(f"--weight needs {rs.rank} coordinates for {rs.label}, got {len(lam)}")
    return lam


def _cache(args):
    d = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    if d is None:
        d = Path.home() / ".cache" / "alcovekit"
    return CharacterCache(d)


def _emit(args, record, text):
    if args.json:
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------


def cmd_certificate(args):
    if args.verify_only:
        src = sys.stdin if args.verify_only == "-" else open(args.verify_only)
        with src:
            try:
                data = json.load(src)
                data = data.get("certificate", data)
                cert = SteinbergCertificate.from_record(data)
            except (ValueError, KeyError, TypeError) as exc:
                raise UsageError(f"cannot read certificate: {exc}") from None
        rs = cert.rs
    else:
        if args.algebra is None or args.level is None or args.weight is None:
            raise UsageError("certificate needs --algebra, --level and --weight (or --verify-only FILE)")
        rs = _rs(args)
        cert = steinberg_certificate(rs, args.level, _weight(rs, args))
    chk = verify_certificate(rs, cert)
    rec = {"certificate": cert.to_record(), "verified": chk.ok, "reason": chk.reason}
    r = cert.to_record()
    lam = r["Lambda"]
    text = "\n".join([
        f"algebra   {r['label']}",
        f"level     {r['level']}",
        f"lambda    {','.join(r['lambda'])}",
        f"mu        {','.join(r['mu'])}",
        f"w         {r['w_word']}",
        f"Lambda    {','.join(lam['classical'])} + {lam['level']}*Lambda_0 + ({lam['degree']})*delta",
        f"v_D word  {r['v_D_word']} (length {len(r['v_D_word'])})",
        f"verified  {chk.ok} ({chk.reason})",
    ])
    _emit(args, rec, text)
    return 0 if chk.ok else 1


def cmd_locate(args):
    rs = _rs(args)
    base = _coords(args.point)
    eps = _coords(args.eps) if args.eps else rs.rho
    if len(base) != rs.rank or len(eps) != rs.rank:
        raise UsageError(f"{rs.label} needs {rs.rank} coordinates")
    cert = fold_to_alcove(rs, LexPoint(base, eps))
    rec = cert.to_record()
    n_walls = separating_count(rs, interior_point(rs), cert.point)
    rec["length"] = len(cert.word)
    rec["separating_walls"] = n_walls
    text = "\n".join([
        f"alcove word      {list(cert.word)} (length {len(cert.word)}, separating walls {n_walls})",
        f"linear part u    {list(cert.u.word)}",
        f"mu'              {','.join(rec['mu_prime_coords'])}",
        f"translation      {','.join(rec['transl_coords'])} (simple-root coordinates)",
    ])
    _emit(args, rec, text)
    return 0 if n_walls == len(cert.word) else 1


def _decomposition(rs, args, lam):
    if args.parts:
        return decomposition_from_parts(rs, args.level, lam, _parts(args.parts))
    return canonical_decomposition(rs, args.level, lam)


def cmd_decompose(args):
    rs = _rs(args)
    lam = _weight(rs, args)
    dec = _decomposition(rs, args, lam)
    parts = [[str(c) for c in p] for p in dec.parts]
    rem = [str(c) for c in dec.remainder]
    rec = {"label": str(rs.label), "level": args.level, "lambda": [str(c) for c in lam],
           "parts": parts, "remainder": rem}
    lines = [f"{rs.label}  level {args.level}  lambda = {','.join(rec['lambda'])}"]
    factors = [f"D({args.level},{args.level}*({','.join(p)}))" for p in parts]
    factors.append(f"D({args.level},({','.join(rem)}))")
    lines.append("D(l,lambda) = " + " * ".join(factors))
    _emit(args, rec, "\n".join(lines))
    return 0


def cmd_character(args):
    rs = _rs(args)
    lam = _weight(rs, args)
    f = demazure_character(rs, args.level, lam, _cache(args))
    ch = classical_character(f)
    g = graded_classical_character(f)
    if args.json:
        rec = char_to_record(rs, args.level, lam, f)
        rec["dimension"] = dimension(f)
        rec["graded"] = {str(d): {",".join(map(str, w)): c for w, c in sorted(layer.items())}
                         for d, layer in g.items()}
        print(json.dumps(rec, sort_keys=True, indent=2))
    else:
        print(f"D({args.level}, {','.join(str(c) for c in lam)}) in {rs.label}")
        print(f"dimension  {dimension(f)}")
        print(f"classical  {format_character(ch)}")
        print(f"graded     {format_graded(g)}")
    return 0


def cmd_verify_fusion(args):
    rs = _rs(args)
    lam = _weight(rs, args)
    dec = _decomposition(rs, args, lam)
    rep = verify_fusion(rs, args.level, lam, dec, _cache(args))
    rec = {"label": str(rs.label), "level": args.level, "lambda": [str(c) for c in lam],
           "ok": rep.ok, "lhs_dimension": rep.lhs_dim, "factor_dimensions": rep.factor_dims,
           "factors": [[lev, list(mu)] for lev, mu in rep.factors],
           "first_difference": None if rep.first_difference is None
           else [list(rep.first_difference[0]), rep.first_difference[1], rep.first_difference[2]]}
    _emit(args, rec, rep.summary())
    return 0 if rep.ok else 1


def cmd_verify_qsystem(args):
    rs = _rs(args)
    lam = _weight(rs, args)
    rep = verify_qsystem(rs, args.level, lam, args.node, _cache(args))
    rec = {"label": str(rs.label), "level": args.level, "lambda": [str(c) for c in lam],
           "node": args.node, "mu": list(rep.mu), "shift": rep.shift, "dimensions": rep.dims,
           "ungraded_ok": rep.ungraded_ok, "graded_ok": rep.graded_ok}
    text = f"mu = {','.join(map(str, rep.mu))}\n" + rep.summary()
    _emit(args, rec, text)
    return 0 if rep.ok else 1


def cmd_selftest(args):
    labels = args.labels.split(",") if args.labels else list(SWEEP_LABELS)
    for lab in labels:
        build_root_system(lab)
    jobs = [(name, lab) for name in SWEEPS for lab in labels]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(run_sweep, n, lab, args.samples, args.seed) for n, lab in jobs]
            results = [f.result() for f in futures]
    else:
        results = [run_sweep(n, lab, args.samples, args.seed) for n, lab in jobs]
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"ok": ok, "seed": args.seed, "samples": args.samples,
                          "results": [{"sweep": r.name, "label": r.label, "cases": r.cases,
                                       "failures": len(r.failures)} for r in results]},
                         sort_keys=True, indent=2))
    else:
        for r in results:
            print(r.line())
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _validate_entry(path):
    try:
        rs, level, lam, f = record_to_char(json.loads(Path(path).read_text()))
    except (ValueError, KeyError, TypeError, LabelError, OSError) as exc:
        return False, f"unreadable: {exc.__class__.__name__}"
    if CharacterCache.filename(rs.label, level, lam) != Path(path).name:
        return False, "file name does not match its key"
    fresh = compute_demazure_character(rs, level, lam)
    if dimension(fresh) != dimension(f) or fresh != f:
        return False, f"dimension {dimension(f)} != recomputed {dimension(fresh)}"
    if not highest_weight_check(rs, lam, classical_character(f)):
        return False, "highest weight check failed"
    return True, f"dimension {dimension(f)}"


def cmd_cache(args):
    cache = _cache(args)
    entries = cache.entries()
    if args.action == "clear":
        cache.clear()
        print(f"removed {len(entries)} entries from {cache.directory}")
        return 0
    if args.action == "list":
        for p in entries:
            print(p.name)
        return 0
    bad = 0
    for p in entries:
        ok, msg = _validate_entry(p)
        bad += not ok
        print(f"{'PASS' if ok else 'INVALID'} {p.name}: {msg}")
    print(f"{len(entries) - bad}/{len(entries)} entries valid")
    return 1 if bad else 0


# -- parser ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="alcovekit",
        description="Steinberg certificates, alcove folding and Demazure character checks.",
        epilog=NODE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, weight=True, level=True):
        p = sub.add_parser(name, help=help, epilog=NODE_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("--algebra", required=name not in ("certificate", "selftest", "cache"),
                       help="affine label such as E6^1, A4^2 or D4^3")
        if level:
            p.add_argument("--level", type=int, required=name != "certificate", help="level l >= 1")
        if weight:
            p.add_argument("--weight", required=name != "certificate",
                           help="dominant weight in fundamental-weight coordinates, e.g. 1,0,2")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cache-dir", help=f"character cache directory (default ${CACHE_ENV} or ~/.cache/alcovekit)")
        p.set_defaults(func=func)
        return p

    p = add("certificate", cmd_certificate, "Steinberg certificate for (level, weight), verified")
    p.add_argument("--verify-only", "--verify", dest="verify_only", metavar="FILE",
                   help="re-verify a JSON certificate ('-' reads stdin)")
    p = add("locate", cmd_locate, "fold a rational point into the fundamental alcove", weight=False, level=False)
    p.add_argument("--point", required=True, help="rational point, e.g. 5/2,1/3")
    p.add_argument("--eps", help="perturbation direction (default rho)")
    p = add("decompose", cmd_decompose, "fusion decomposition lambda = l*sum(parts) + remainder")
    p.add_argument("--parts", help="explicit parts 'a,b;c,d' (needed outside types A, D, E)")
    add("character", cmd_character, "Demazure character D(level, weight)")
    p = add("verify-fusion", cmd_verify_fusion, "check the fusion factorisation at character level")
    p.add_argument("--parts", help="explicit parts 'a,b;c,d'")
    p = add("verify-qsystem", cmd_verify_qsystem, "check the Q-system short exact sequence on characters")
    p.add_argument("--node", type=int, required=True, help="minuscule node i")
    p = add("selftest", cmd_selftest, "randomised invariant sweeps", weight=False, level=False)
    p.add_argument("--labels", help="comma separated labels (default: the standard sweep list)")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p = add("cache", cmd_cache, "list, validate or clear the character cache", weight=False, level=False)
    p.add_argument("action", choices=["list", "validate", "clear"])
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, LabelError, PreconditionError, UnsupportedError, InvalidElementError) as exc:
        print(f"alcovekit {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
