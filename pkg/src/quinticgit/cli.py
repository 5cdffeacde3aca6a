"""Command-line front end.

Exit codes: 0 on success, 1 when a computation rejects its input (bad
degrees, parse errors, failed checks), 2 on usage errors.  The default
output format can be set with ``QUINTICGIT_FORMAT=json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources
from typing import Sequence

from . import __version__
from .critical import Kind, critical_by_label, enumerate_critical, verify_completeness
from .invariants import (
    WeightSystem,
    genus_closed_form,
    genus_count,
    hypersurface_pg,
    lct_verdict,
    lct_weight_bound,
)
from .lattice import InternalInconsistency, InvalidArgument, MonomialConfiguration
from .luna import DEFAULT_SEED, boundary_report
from .polyarith import (
    VARS3,
    VARS4,
    ParseError,
    branch_octic,
    cover_discriminant,
    format_poly,
    parse,
    triple_cover_form,
)
from .sl2rep import slice_report
from .stability import analyze

FORMAT_ENV = "QUINTICGIT_FORMAT"
SUBCOMMANDS = (
    "critical", "verify-completeness", "classify", "boundary", "sl2-slice",
    "genus", "pg", "lct", "cover", "branch",
)


def load_schema(subcommand: str) -> dict:
    """JSON schema shipped for a subcommand's ``--json`` output."""
    if subcommand not in SUBCOMMANDS:
        raise InvalidArgument(f"no schema for {subcommand!r}")
    path = resources.files("quinticgit") / "schemas" / f"{subcommand}.json"
    return json.loads(path.read_text(encoding="utf-8"))


class ComputationError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _emit(data: dict, text: str, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _read_poly(path: str, variables) -> "SparsePolynomial":  # noqa: F821
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ComputationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse(text.strip(), variables)
    except ParseError as exc:
        raise ComputationError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_critical(args, out):
    recs = enumerate_critical(args.degree)
    rows = []
    lines = [f"critical one-parameter subgroups, degree {args.degree}: {len(recs)}"]
    lines.append(f"{'label':<10}{'lambda':<18}{'kind':<22}{'|M+|':>5}{'|M0|':>6}")
    for k, rec in enumerate(recs, start=1):
        label = rec.label or f"critical{k}"
        rows.append({
            "label": label,
            "lambda": list(rec.lam.weights),
            "kind": rec.kind.value,
            "nonneg_count": len(rec.nonneg),
            "zero_count": len(rec.zero),
            "zero_monomials": [list(m) for m in rec.zero.as_tuples()],
            "equivalents": [list(w.weights) for w in rec.equivalents],
        })
        lines.append(
            f"{label:<10}{_vec(rec.lam.weights):<18}{rec.kind.value:<22}{len(rec.nonneg):>5}{len(rec.zero):>6}"
        )
    data = {"degree": args.degree, "count": len(recs), "records": rows}
    _emit(data, "\n".join(lines), args.json, out)
    return 0


def cmd_verify(args, out):
    bound = args.bound if args.bound is not None else 3 * args.degree**3

    def progress(a0, b, scanned):
        if not args.quiet:
            print(f"slab a0={a0}/{b} scanned={scanned}", file=sys.stderr, flush=True)

    rep = verify_completeness(args.degree, bound, workers=args.workers, progress=progress, backend=args.backend)
    data = {
        "degree": rep.degree,
        "bound": rep.bound,
        "scanned": rep.scanned,
        "violations": [list(v) for v in rep.violations],
        "ok": rep.ok,
    }
    text = [
        f"degree {rep.degree}, bound {rep.bound}: scanned {rep.scanned} normalized primitive weights",
        f"violations: {len(rep.violations)}",
    ]
    text += [f"  {_vec(v)}" for v in rep.violations[:50]]
    text.append("complete" if rep.ok else "INCOMPLETE")
    _emit(data, "\n".join(text), args.json, out)
    return 0 if rep.ok else 1


def _classify_data(poly, report) -> tuple[dict, str]:
    hull = report.hull
    cert = report.certificate
    worst = report.worst
    flag = report.flag
    data = {
        "degree": report.degree,
        "polynomial": format_poly(poly),
        "support_size": len(poly),
        "torus_verdict": report.torus_verdict.value,
        "hull": {
            "verdict": hull.verdict.value,
            "barycentric": None if hull.barycentric is None else [
                {"monomial": list(m), "weight": _frac(c)} for m, c in hull.barycentric
            ],
            "lambda": None if hull.lam is None else list(hull.lam),
        },
        "certificate": None if cert is None else {
            "label": cert.label,
            "lambda": list(cert.lam.weights),
            "lambda_in_input_coordinates": list(cert.original_lam),
            "perm": list(cert.perm),
            "mu": cert.mu,
        },
        "worst": None if worst is None else {
            "lambda": list(worst.lam.weights),
            "squared_ratio": _frac(worst.squared_ratio),
            "nearest_point": [_frac(x) for x in worst.nearest_point],
        },
        "kempf_flag": None if flag is None else {
            "point": flag.point,
            "line": None if flag.line is None else list(flag.line),
            "plane": flag.plane,
            "partial": flag.partial,
            "text": flag.describe(),
        },
    }
    if cert is None:
        head = f"{report.torus_verdict.value} (torus); no non-stability certificate"
    else:
        head = f"{report.torus_verdict.value} (torus); certificate {cert.label} {_vec(cert.lam.weights)}"
    lines = [head, f"polynomial: {data['polynomial']}", f"support size: {len(poly)}"]
    lines.append(f"hull: {hull.verdict.value}" + ("" if hull.lam is None else f", witness lambda {_vec(hull.lam)}"))
    if cert is not None:
        lines.append(
            f"certificate: {cert.label} {_vec(cert.lam.weights)} after x_k -> x_perm[k], perm {_vec(cert.perm)}, mu {cert.mu}"
        )
        lines.append(f"  in input coordinates: {_vec(cert.original_lam)}")
    if worst is not None:
        lines.append(f"worst 1-PS: {_vec(worst.lam.weights)}, mu^2/|lambda|^2 = {_frac(worst.squared_ratio)}")
    if flag is not None:
        lines.append(f"Kempf flag: {flag.describe()}")
    return data, "\n".join(lines)


def cmd_classify(args, out):
    poly = _read_poly(args.input, VARS4)
    if poly.is_zero():
        raise ComputationError("the zero polynomial has no support")
    if not poly.is_homogeneous():
        raise ComputationError("input polynomial is not homogeneous")
    cfg = MonomialConfiguration(poly.degree, poly.support())
    report = analyze(cfg)
    data, text = _classify_data(poly, report)
    _emit(data, text, args.json, out)
    return 0


def cmd_boundary(args, out):
    if args.degree != 5:
        raise ComputationError("boundary reports are defined for degree 5 only")
    recs = [r for r in enumerate_critical(5) if r.kind is Kind.MINIMAL_ORBIT_BOUNDARY]
    if args.lambda_ is not None:
        rec = critical_by_label(args.lambda_, 5)
        if rec.kind is not Kind.MINIMAL_ORBIT_BOUNDARY:
            raise ComputationError(f"{rec.label} does not produce a boundary component")
        recs = [rec]
    reports = [boundary_report(r.lam, 5, seed=args.seed, label=r.label) for r in recs]
    lines = []
    for rep in reports:
        d = rep.as_dict()
        lines.append(f"{rep.label} {_vec(rep.lam.weights)}")
        lines.append("  zero monomials (" + str(len(rep.zero_monomials)) + "): "
                     + " ".join(m.to_text() for m in rep.zero_monomials))
        lines.append(f"  centralizer dim: {rep.centralizer_dim}")
        lines.append(f"  normal weights: {len(rep.normal_weights)}")
        lines.append(f"  fiber +: {_vec(d['fiber_pos'])}")
        lines.append(f"  fiber -: {_vec(d['fiber_neg'])}")
        lines.append(f"  fiber zeros: {rep.fiber_zero_count}")
        published = "-" if rep.paper_dim is None else str(rep.paper_dim)
        flag = "  DISCREPANCY" if rep.discrepancy else ""
        lines.append(f"  dim estimate: {rep.dim_estimate} (orbit rank {rep.orbit_rank}, seed {rep.seed}); published: {published}{flag}")
    data = {"degree": 5, "seed": args.seed, "reports": [r.as_dict() for r in reports]}
    _emit(data, "\n".join(lines), args.json, out)
    return 0


def cmd_sl2(args, out):
    rep = slice_report()
    lines = [f"{name}: {r.to_text()} (dim {r.dim})" for name, r in rep.steps()]
    lines.append("N_x = Sym^5 x Sym^5 + Sym^6: " + ("yes" if rep.ok else "no"))
    _emit(rep.as_dict(), "\n".join(lines), args.json, out)
    return 0


def cmd_genus(args, out):
    try:
        count = genus_count(args.degree)
        closed = genus_closed_form(args.degree)
    except InvalidArgument as exc:
        raise ComputationError(str(exc)) from None
    if count != closed:
        raise InternalInconsistency(f"lattice count {count} differs from closed form {closed}")
    data = {"degree": args.degree, "genus": count, "closed_form": closed}
    _emit(data, str(count), args.json, out)
    return 0


def cmd_pg(args, out):
    value = hypersurface_pg(args.degree)
    _emit({"degree": args.degree, "pg": value}, str(value), args.json, out)
    return 0


def cmd_lct(args, out):
    try:
        weights = [Fraction(w) for w in args.weights.split(",")]
        degree = Fraction(args.degree)
    except (ValueError, ZeroDivisionError):
        raise ComputationError(f"cannot read weights {args.weights!r} / degree {args.degree!r}") from None
    bound = lct_weight_bound(WeightSystem(weights, degree))
    verdict = lct_verdict(bound)
    data = {
        "weights": [_frac(w) for w in weights],
        "degree": _frac(degree),
        "lct_bound": _frac(bound),
        "verdict": verdict.value,
    }
    _emit(data, f"lct bound {_frac(bound)}: {verdict.value}", args.json, out)
    return 0


def cmd_cover(args, out):
    g2 = _read_poly(args.g2, VARS3)
    f4 = _read_poly(args.f4, VARS3)
    f5 = _read_poly(args.f5, VARS3)
    h4, h6 = triple_cover_form(g2, f4, f5)
    disc = cover_discriminant(h4, h6)
    data = {"h4": format_poly(h4), "h6": format_poly(h6), "discriminant": format_poly(disc)}
    text = f"h4 = {data['h4']}\nh6 = {data['h6']}\nD = {data['discriminant']}"
    _emit(data, text, args.json, out)
    return 0


def cmd_branch(args, out):
    f3 = _read_poly(args.f3, VARS3)
    f4 = _read_poly(args.f4, VARS3)
    f5 = _read_poly(args.f5, VARS3)
    b = branch_octic(f3, f4, f5)
    _emit({"branch": format_poly(b)}, format_poly(b), args.json, out)
    return 0


# ---------------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    env_json = os.environ.get(FORMAT_ENV, "text").strip().lower() == "json"
    parser = argparse.ArgumentParser(prog="quinticgit", description="GIT of quintic surfaces in P^3")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="json", action="store_true", default=env_json, help="emit JSON")
        fmt.add_argument("--text", dest="json", action="store_false", help="emit text")
        return p

    p = add("critical", cmd_critical, "table of critical one-parameter subgroups")
    p.add_argument("--degree", type=_positive_int, default=5)

    p = add("verify-completeness", cmd_verify, "exhaustive scan of normalized weights up to a bound")
    p.add_argument("--degree", type=_positive_int, default=5)
    p.add_argument("--bound", type=_positive_int, default=None, help="default 3*d^3")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--backend", choices=["cython", "python"], default=None)
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")

    p = add("classify", cmd_classify, "torus stability and certificates for a polynomial's support")
    p.add_argument("--input", required=True, metavar="FILE")

    p = add("boundary", cmd_boundary, "boundary components attached to critical weights")
    p.add_argument("--degree", type=_positive_int, default=5)
    p.add_argument("--lambda", dest="lambda_", metavar="K", default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    add("sl2-slice", cmd_sl2, "SL2 decomposition of the normal space at the 2Q+H point")

    p = add("genus", cmd_genus, "geometric genus of the lambda1 singularity")
    p.add_argument("--degree", type=int, required=True)

    p = add("pg", cmd_pg, "geometric genus of a smooth hypersurface")
    p.add_argument("--degree", type=_positive_int, required=True)

    p = add("lct", cmd_lct, "log canonical threshold bound from weights")
    p.add_argument("--weights", required=True, metavar="A,B,C")
    p.add_argument("--degree", required=True, metavar="W")

    p = add("cover", cmd_cover, "depressed triple cover and its discriminant")
    for name in ("--g2", "--f4", "--f5"):
        p.add_argument(name, required=True, metavar="FILE")

    p = add("branch", cmd_branch, "branch octic f3*f5 - f4^2")
    for name in ("--f3", "--f4", "--f5"):
        p.add_argument(name, required=True, metavar="FILE")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ComputationError, InvalidArgument, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
