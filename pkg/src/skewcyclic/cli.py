"""Command line interface.

Every subcommand builds a job dictionary and hands it to :func:`execute`,
which returns JSON-ready data plus human-readable lines.  ``--job FILE``
(``-`` for stdin) supplies the same dictionary directly.

Exit codes: 0 on success, 1 on a computational error (reported on stderr as
JSON with the error type), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import poly as P
from .circulant import (
    classical_circulant,
    p_sigma,
    shift_matrix,
    sigma_circulant,
)
from .codes import (
    classify,
    code_from_generator,
    code_report,
    control_polynomial,
    dual_code,
    free_distance,
    heller_bound,
    minimal_generator_matrix,
    smallest_cyclic_module,
)
from .errors import ParseError, SkewCyclicError, UsageError
from .fzlinalg import is_minimal, rank
from .galois import build_field
from .ring import automorphism_count, build_ring
from .skew import (
    SkewContext,
    hat_skew,
    pi_of,
    principal_generator,
    reduce_family,
    tilde,
)
from .textio import (
    format_matrix,
    format_ring,
    format_skew,
    matrix_to_json,
    parse_fz,
    parse_poly,
    parse_ring,
    skew_to_json,
)

def default_imax() -> int:
    raw = os.environ.get("SKEWCYCLIC_IMAX")
    if raw is None:
        return 20
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"SKEWCYCLIC_IMAX must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError("SKEWCYCLIC_IMAX must be positive")
    return value


# job decoding

def _ring(job):
    if "n" not in job or job["n"] is None:
        raise UsageError("this command needs --n")
    field = build_field(int(job.get("p", 2)), int(job.get("m", 1)), job.get("modulus"))
    return build_ring(field, int(job["n"]))


def _context(job) -> SkewContext:
    ring = _ring(job)
    sigma = job.get("sigma", "x")
    image = parse_ring(sigma, ring) if isinstance(sigma, str) else tuple(sigma)
    return SkewContext(ring, ring.automorphism(image))


def _polys(job, ctx):
    raw = job.get("polys") or []
    if not raw:
        raise UsageError("this command needs at least one --poly")
    out = []
    for item in raw:
        if isinstance(item, str):
            out.append(parse_poly(item, ctx))
        else:
            out.append(ctx.poly([tuple(c) for c in item]))
    return out


def _skew_data(g):
    return {"text": format_skew(g), "coeffs": skew_to_json(g), "crt": _crt_json(g)}


def _crt_json(g):
    return [[list(res) for res in nu] for nu in g.crt_form()]


def _matrix_lines(name, matrix):
    lines = [f"{name}:"]
    for row in format_matrix(matrix):
        lines.append("  [" + ", ".join(row) + "]")
    return lines


# command handlers

def _cmd_autos(job):
    ring = _ring(job)
    autos = ring.automorphisms
    data = {
        "ring": ring.to_json(),
        "count": len(autos),
        "formula_count": automorphism_count(ring),
        "factors": [list(f) for f in ring.factors],
        "images": [list(s.image) for s in autos],
        "component_perms": [list(s.component_perm) for s in autos],
        "fixes_all_components": [s.fixes_all_components() for s in autos],
    }
    lines = [f"{len(autos)} automorphisms of GF({ring.field.q})[x]/(x^{ring.n} - 1)"]
    for s in autos:
        tag = "" if s.fixes_all_components() else "  permutes " + str(list(s.component_perm))
        lines.append(f"  x -> {format_ring(ring, s.image)}{tag}")
    return data, lines


def _cmd_eval(job):
    ctx = _context(job)
    polys = _polys(job, ctx)
    results = []
    for g in polys:
        entry = _skew_data(g)
        entry["hat"] = _skew_data(hat_skew(g))
        entry["tilde"] = _skew_data(tilde(g))
        results.append(entry)
    return {"results": results}, [format_skew(g) for g in polys]


def _cmd_reduce(job):
    ctx = _context(job)
    polys = _polys(job, ctx)
    family = reduce_family(polys)
    outcome = principal_generator(polys)
    data = {
        "reduced": [_skew_data(g) for g in family],
        "normalized": [_skew_data(g) for g in outcome.reduced_family],
        "components": outcome.components,
    }
    lines = ["reduced family:"] + [f"  {format_skew(g)}" for g in family]
    return data, lines


def _outcome_data(outcome):
    data = {
        "is_principal": outcome.is_principal,
        "is_delay_free": outcome.is_delay_free,
        "generator": None,
        "pi": None,
        "kappa": None,
        "reduced_family": [_skew_data(g) for g in outcome.reduced_family],
        "components": outcome.components,
    }
    if outcome.generator is not None:
        g = outcome.generator
        data["generator"] = _skew_data(g)
        if g:
            data["pi"] = list(pi_of(g))
            data["kappa"] = P.deg(pi_of(g))
        else:
            data["kappa"] = 0
    return data


def _cmd_generator(job):
    ctx = _context(job)
    outcome = principal_generator(_polys(job, ctx))
    data = _outcome_data(outcome)
    lines = [f"principal: {outcome.is_principal}", f"delay-free: {outcome.is_delay_free}"]
    if outcome.generator is not None:
        lines.append(f"generator: {format_skew(outcome.generator)}")
        lines.append(f"kappa: {data['kappa']}")
    return data, lines


def _cmd_circulant(job):
    kind = job.get("kind", "sigma")
    if kind not in ("sigma", "classical", "p_sigma", "shift"):
        raise UsageError(f"unknown circulant kind {kind!r}")
    ctx = _context(job)
    data = {"kind": kind}
    if kind == "p_sigma":
        M = p_sigma(ctx.sigma)
    elif kind == "shift":
        M = shift_matrix(ctx.ring)
    else:
        g = _polys(job, ctx)[0]
        if kind == "classical":
            if g.deg > 0:
                raise UsageError("a classical circulant needs a polynomial without z")
            M = classical_circulant(ctx.ring, g.zfree)
        else:
            M = sigma_circulant(g)
        data["pi"] = list(pi_of(g)) if g else None
    data["matrix"] = matrix_to_json(M)
    data["rank"] = rank(M)
    return data, _matrix_lines("matrix", M) + [f"rank: {data['rank']}"]


def _code(job):
    ctx = _context(job)
    return code_from_generator(ctx, _polys(job, ctx))


def _cmd_control(job):
    code = _code(job)
    report = control_polynomial(code)
    data = {
        "control_poly": _skew_data(report.control_poly),
        "dual_generator": _skew_data(report.dual_generator),
        "dual_control": _skew_data(report.dual_control),
        "control_matrix": matrix_to_json(report.control_matrix),
        "kernel_basis": matrix_to_json(report.kernel_basis),
    }
    lines = [
        f"control polynomial h: {format_skew(report.control_poly)}",
        f"dual generator h': {format_skew(report.dual_generator)}",
        f"dual control g': {format_skew(report.dual_control)}",
    ] + _matrix_lines("control matrix", report.control_matrix)
    return data, lines


def _code_summary(code, i_max):
    data = code_report(code, i_max)
    data["generator_text"] = format_skew(code.generator)
    data["generator_matrix_is_minimal"] = (
        is_minimal(code.generator_matrix) if code.is_code and code.kappa else None
    )
    lines = [
        f"generator: {format_skew(code.generator)}",
        f"dimension: {code.kappa}",
        f"complexity: {code.complexity}",
        f"basic: {code.is_code}",
    ]
    if code.is_code and code.kappa:
        lines += _matrix_lines("minimal generator matrix", minimal_generator_matrix(code))
        lines.append(f"free distance: {data['d_free']}")
        lines.append(f"Heller bound: {data['heller_bound']}")
    return data, lines


def _cmd_dual(job):
    code = _code(job)
    return _code_summary(dual_code(code), job.get("imax") or default_imax())


def _cmd_distance(job):
    code = _code(job)
    d = free_distance(code)
    return {"d_free": d}, [f"free distance: {d}"]


def _cmd_heller(job):
    missing = [k for k in ("n", "k", "delta", "mem", "q") if job.get(k) is None]
    if missing:
        raise UsageError("heller needs " + ", ".join("--" + k for k in missing))
    i_max = job.get("imax") or default_imax()
    value = heller_bound(job["n"], job["k"], job["delta"], job["mem"], job["q"], i_max)
    return {"heller_bound": value, "i_max": i_max}, [f"Heller bound: {value}"]


def _cmd_classify(job):
    code = _code(job)
    data, lines = _code_summary(code, job.get("imax") or default_imax())
    cls = classify(code)
    data["sigma_forces_block"] = cls.sigma_forces_block
    lines.append(f"block code: {cls.is_block}")
    lines.append(f"sigma fixes every component: {cls.sigma_forces_block}")
    return data, lines


def _cmd_closure(job):
    ctx = _context(job)
    raw = job.get("vector")
    if raw is None:
        raise UsageError("closure needs --vector")
    vector = [parse_fz(e, ctx.ring.field) if isinstance(e, str) else P.trim(e) for e in raw]
    result = smallest_cyclic_module(ctx, vector)
    data = {
        "generator": _skew_data(result.generator),
        "module_matrix": matrix_to_json(result.module_matrix),
        "rank": result.rank,
        "is_code": result.is_code,
    }
    lines = _matrix_lines("module", result.module_matrix) + [
        f"rank: {result.rank}",
        f"basic: {result.is_code}",
    ]
    return data, lines


HANDLERS = {
    "autos": _cmd_autos,
    "eval": _cmd_eval,
    "reduce": _cmd_reduce,
    "generator": _cmd_generator,
    "circulant": _cmd_circulant,
    "control": _cmd_control,
    "dual": _cmd_dual,
    "distance": _cmd_distance,
    "heller": _cmd_heller,
    "classify": _cmd_classify,
    "closure": _cmd_closure,
}


def execute(job: dict):
    """Run one job; returns (data, lines)."""
    command = job.get("command")
    if command not in HANDLERS:
        raise UsageError(f"unknown command {command!r}")
    return HANDLERS[command](job)


# argument parsing

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def _add_ring_args(parser, needs_n=True):
    parser.add_argument("--p", type=int, default=2, help="field characteristic")
    parser.add_argument("--m", type=int, default=1, help="extension degree")
    parser.add_argument("--modulus", type=_int_list, help="field modulus, low to high")
    parser.add_argument("--n", type=int, required=needs_n, help="length")


def _add_skew_args(parser, polys=True):
    _add_ring_args(parser)
    parser.add_argument("--sigma", default="x", help="image of x, e.g. 'x^2' or 'a*x'")
    if polys:
        parser.add_argument("--poly", action="append", dest="polys",
                            help="skew polynomial, repeatable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewcyclic",
        description="Skew-cyclic convolutional codes over GF(p^m)[x]/(x^n - 1).",
    )
    parser.add_argument("--json", action="store_true", help="print JSON")
    parser.add_argument("--job", help="read a JSON job from a file ('-' for stdin)")
    sub = parser.add_subparsers(dest="command")

    _add_ring_args(sub.add_parser("autos", help="list the automorphisms of A"))
    _add_skew_args(sub.add_parser("eval", help="evaluate skew polynomials"))
    _add_skew_args(sub.add_parser("reduce", help="reduce a family"))
    _add_skew_args(sub.add_parser("generator", help="principal generator of a left ideal"))
    circ = sub.add_parser("circulant", help="circulant matrices")
    _add_skew_args(circ)
    circ.add_argument("--kind", default="sigma",
                      choices=["sigma", "classical", "p_sigma", "shift"])
    _add_skew_args(sub.add_parser("control", help="control polynomial"))
    for name, text in (("dual", "dual code"), ("distance", "free distance"),
                       ("classify", "full code report")):
        p = sub.add_parser(name, help=text)
        _add_skew_args(p)
        p.add_argument("--imax", type=int, help="largest i in the Heller bound")
    heller = sub.add_parser("heller", help="Heller bound")
    for name in ("n", "k", "delta", "mem", "q", "imax"):
        heller.add_argument(f"--{name}", type=int)
    closure = sub.add_parser("closure", help="smallest sigma-cyclic module of a vector")
    _add_skew_args(closure, polys=False)
    closure.add_argument("--vector", action="append",
                         help="entry of the vector as a polynomial in z, repeatable")

    ex = sub.add_parser("examples", help="replay the bundled worked examples")
    ex_sub = ex.add_subparsers(dest="action")
    ex_sub.add_parser("list")
    run = ex_sub.add_parser("run")
    run.add_argument("target", nargs="?", default="all")
    return parser


def _emit(data, lines, as_json: bool):
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load_job(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read job: {exc}")


def _run_examples(args) -> int:
    from .examples import fixture_ids, run_fixture

    if args.action == "list":
        for fid in fixture_ids():
            print(fid)
        return 0
    if args.action != "run":
        raise UsageError("use 'examples list' or 'examples run [id|all]'")
    targets = fixture_ids() if args.target == "all" else [args.target]
    if args.target != "all" and args.target not in fixture_ids():
        raise UsageError(f"unknown example {args.target!r}")
    ok = True
    results = []
    for fid in targets:
        outcome = run_fixture(fid)
        ok = ok and outcome.passed
        results.append(outcome)
    if args.json:
        print(json.dumps([r.to_json() for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.summary())
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "examples":
            return _run_examples(args)
        if args.job:
            job = _load_job(args.job)
            if args.command:
                job["command"] = args.command
        else:
            if not args.command:
                parser.print_usage(sys.stderr)
                return 2
            job = {k: v for k, v in vars(args).items() if k not in ("json", "job")}
        data, lines = execute(job)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SkewCyclicError as exc:
        report = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            report["position"] = exc.position
        print(json.dumps(report), file=sys.stderr)
        return 1
    _emit(data, lines, args.json)
    return 0


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
