"""Command-line interface.

Exit codes: 0 success (or integrable), 1 a negative mathematical answer
(not a complex structure, not integrable, no structure exists), 2 bad input.
"""

import argparse
import json
import sys
from pathlib import Path

from . import rational as rq
from .complex_structures import Endomorphism, is_complex_structure, is_integrable
from .constructions import (
    BianchiSpec,
    bianchi,
    orthogonal_pairing,
    orthogonal_product,
    standard_structure,
)
from .errors import LieCxError, NoKnownStructure
from .jsonio import (
    algebra_from_dict,
    algebra_to_dict,
    endomorphism_from_dict,
    endomorphism_to_dict,
    load_json,
    report_to_dict,
)
from .lie_core import direct_product
from .polysys import ADAPTED_BASES, adapted_setup, emit_polynomial_system
from .search import (
    DEFAULT_SEED,
    SearchConfig,
    default_threads,
    numeric_search,
    rationalize_and_certify,
    snap_rational,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _theta(text):
    try:
        return rq.parse_scalar(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"theta must look like 'p' or 'p/q', got {text!r}")


def _fix(text):
    try:
        pos, value = text.split("=")
        r, c = (int(s) for s in pos.split(","))
        return (r - 1, c - 1), rq.parse_scalar(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected 'row,col=value' (1-based), got {text!r}")


def build_parser():
    p = _Parser(prog="liecx", description="Integrable complex structures on real Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_type(sp, required=True):
        sp.add_argument("--type", type=int, choices=range(1, 9), required=required, metavar="{1..8}")
        sp.add_argument("--theta", type=_theta, metavar="p/q")

    def add_format(sp, default="json", choices=("json", "text")):
        sp.add_argument("--format", choices=choices, default=default)

    sp = sub.add_parser("catalog", help="list the 3-dimensional algebra types")
    add_format(sp, default="text")

    sp = sub.add_parser("construct", help="algebra g x g with its integrable complex structure")
    add_type(sp, required=False)
    sp.add_argument("--son", type=int, metavar="N", help="build o(N) x o(N) instead")
    sp.add_argument("--out-dir", type=Path, help="also write algebra.json and j.json here")
    add_format(sp)

    sp = sub.add_parser("verify", help="check J^2 = -1 and N = 0 exactly")
    sp.add_argument("--algebra", type=Path, required=True)
    sp.add_argument("--j", type=Path, required=True)
    add_format(sp)

    sp = sub.add_parser("search", help="multistart least-squares search on g x g")
    add_type(sp)
    sp.add_argument("--starts", type=int, default=100)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--max-iters", type=int, default=500)
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--certify", action="store_true", help="snap and certify a converged start")
    sp.add_argument("--max-denominator", type=int, default=10**6)
    add_format(sp)

    sp = sub.add_parser("emit", help="print the polynomial integrability system")
    add_type(sp)
    sp.add_argument("--reduce", action="store_true", help="Nijenhuis pairs inside the first factor only")
    sp.add_argument("--adapted", action="store_true", help="basis adapted to a quasi-invariant vector (types 4, 5)")
    sp.add_argument("--fix", type=_fix, action="append", default=[], metavar="R,C=VALUE")
    add_format(sp, default="text")

    sp = sub.add_parser("son", help="o(n) x o(n) and its pairing structure")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    add_format(sp, default="text")
    return p


def _spec(args):
    return BianchiSpec(args.type, args.theta)


def _product(spec):
    g = bianchi(spec)
    return direct_product(g, g)


def _emit_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_catalog(args, out, err):
    rows = []
    for t in range(1, 9):
        spec = BianchiSpec(t, 1 if t in (4, 6) else None)
        g = bianchi(spec)
        brackets = []
        for i, j, terms in g.nonzero_brackets():
            rhs = _symbolic_rhs(t, i, j, terms)
            brackets.append(f"[e{i + 1},e{j + 1}] = {rhs}")
        rows.append({"type": t, "parameter": "theta" if t in (4, 6) else None, "brackets": brackets})
    if args.format == "json":
        _emit_json(rows, out)
    else:
        for row in rows:
            par = " (theta != 0)" if row["parameter"] else ""
            out.write(f"({row['type']}){par}: {', '.join(row['brackets']) or 'abelian'}\n")
    return EXIT_OK


_THETA_TERMS = {(4, 1, 2, 1): "theta", (6, 0, 2, 0): "theta", (6, 1, 2, 1): "theta"}


def _symbolic_rhs(t, i, j, terms):
    parts = []
    for k, x in terms:
        coef = _THETA_TERMS.get((t, i, j, k))
        if coef is None:
            coef = "" if x == 1 else "-" if x == -1 else rq.format_scalar(x) + "*"
        else:
            coef += "*"
        parts.append(f"{coef}e{k + 1}")
    return " + ".join(parts).replace("+ -", "- ")


def cmd_construct(args, out, err):
    if (args.type is None) == (args.son is None):
        raise UsageError("give exactly one of --type or --son")
    if args.son is not None:
        g, J = orthogonal_product(args.son), orthogonal_pairing(args.son)
        meta = {"son": args.son}
    else:
        spec = _spec(args)
        try:
            g, J = standard_structure(spec)
        except NoKnownStructure as exc:
            err.write(f"liecx: no integrable complex structure: {exc}\n")
            return EXIT_NEGATIVE
        meta = {"type": spec.type_id, "theta": None if spec.theta is None else rq.format_scalar(spec.theta)}
    report = is_integrable(g, J)
    doc = {**meta, "algebra": algebra_to_dict(g), "j": endomorphism_to_dict(J), "integrable": report.integrable}
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        (args.out_dir / "algebra.json").write_text(json.dumps(doc["algebra"], indent=2) + "\n")
        (args.out_dir / "j.json").write_text(json.dumps(doc["j"], indent=2) + "\n")
    if args.format == "json":
        _emit_json(doc, out)
    else:
        out.write(f"{g.name}: dim {g.dim}, integrable complex structure: {report.integrable}\n")
        for row in J.m:
            out.write(" ".join(f"{rq.format_scalar(x):>5}" for x in row) + "\n")
    return EXIT_OK if report.integrable else EXIT_NEGATIVE


def _report_text(doc, out):
    if not doc["complex_structure"]:
        out.write("not a complex structure: J^2 != -1\n")
        return
    verdict = "integrable" if doc["integrable"] else "NOT integrable"
    out.write(f"{verdict}: {doc['pairs_checked']} basis pairs, max |N| = {doc['max_residual_norm']}\n")
    for item in doc["nonzero_pairs"]:
        out.write(f"  N(e{item['a']}, e{item['b']}) = {item['value']}\n")


def cmd_verify(args, out, err):
    g = algebra_from_dict(load_json(args.algebra, key="algebra"))
    J = endomorphism_from_dict(load_json(args.j, key="j"))
    if J.dim != g.dim:
        raise UsageError(f"matrix is {J.dim}x{J.dim} but the algebra has dimension {g.dim}")
    if not is_complex_structure(J):
        doc = report_to_dict(None, complex_structure=False)
        code = EXIT_NEGATIVE
    else:
        doc = report_to_dict(is_integrable(g, J), g)
        code = EXIT_OK if doc["integrable"] else EXIT_NEGATIVE
    if args.format == "json":
        _emit_json(doc, out)
    else:
        _report_text(doc, out)
    return code


def cmd_search(args, out, err):
    spec = _spec(args)
    G = _product(spec)
    threads = args.threads if args.threads is not None else default_threads()
    cfg = SearchConfig(starts=args.starts, seed=args.seed, tol=args.tol, max_iters=args.max_iters, threads=threads)
    res = numeric_search(G, cfg)
    doc = res.to_dict()
    doc["algebra"] = G.name
    if args.certify:
        certified = None
        for s in res.converged_indices(cfg.tol)[:20]:
            x, _ = snap_rational(G, res.points[s], cfg)
            J = rationalize_and_certify(G, Endomorphism(x.reshape(G.dim, G.dim).tolist()), args.max_denominator)
            if J is not None:
                certified = {"start": s, "j": endomorphism_to_dict(J)}
                break
        doc["certified"] = certified
    if args.format == "json":
        _emit_json(doc, out)
    else:
        out.write(
            f"{G.name}: best residual {res.best_residual:.3e} (start {res.best_start}), "
            f"{res.converged_starts}/{res.starts} starts <= {cfg.tol:g}, seed {res.seed}\n"
        )
        if args.certify:
            out.write("certified exact structure found\n" if doc["certified"] else "no certified structure\n")
    return EXIT_OK


def cmd_emit(args, out, err):
    spec = _spec(args)
    names = None
    fixed = list(args.fix)
    if args.adapted:
        if spec.type_id not in ADAPTED_BASES:
            raise UsageError("--adapted is available for types 4 and 5")
        G, base_fix, letters = adapted_setup(bianchi(spec), ADAPTED_BASES[spec.type_id])
        fixed = list(base_fix.items()) + fixed
        names = letters
    else:
        G = _product(spec)
    system = emit_polynomial_system(G, fixed, reduce_block=3 if args.reduce else None)
    if args.format == "json":
        _emit_json(system.to_dict(), out)
    else:
        out.write(system.to_text(names))
    return EXIT_OK


def cmd_son(args, out, err):
    g, J = orthogonal_product(args.n), orthogonal_pairing(args.n)
    doc = {"n": args.n, "dim": g.dim, "complex_structure": is_complex_structure(J)}
    code = EXIT_OK
    if args.verify:
        doc["report"] = report_to_dict(is_integrable(g, J), g)
        code = EXIT_OK if doc["report"]["integrable"] else EXIT_NEGATIVE
    if args.format == "json":
        doc["algebra"] = algebra_to_dict(g)
        doc["j"] = endomorphism_to_dict(J)
        _emit_json(doc, out)
    else:
        out.write(f"{g.name}: dim {g.dim}, J^2 = -1: {doc['complex_structure']}\n")
        if args.verify:
            _report_text(doc["report"], out)
    return code


COMMANDS = {
    "catalog": cmd_catalog,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "emit": cmd_emit,
    "son": cmd_son,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "search" and args.starts < 1:
            raise UsageError("--starts must be >= 1")
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        err.write(f"liecx: error: {exc}\n")
    except (LieCxError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        err.write(f"liecx: error: {type(exc).__name__}: {exc}\n")
    return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
