"""Command-line front end.

    idemcalc shortest-path --input graph.tsv --source a
    idemcalc closure --semiring max-min --input graph.tsv --format json
    idemcalc axioms --semiring interval-min-plus --samples 1000

Exit status: 0 on success, 1 when ``axioms`` finds a violated law, 2 for
parse/usage errors, 3 for algebraic failures (no closure, negative cycle).
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .axioms import check_axioms, format_report
from .calculus import (
    SampledFunction,
    idempotent_integral,
    legendre_transform,
    parse_function_csv,
    riemann_universal,
)
from .errors import AlgebraError, IdemcalcError
from .graphs import Graph, parse_graph
from .matrices import Matrix, format_element, format_matrix, parse_matrix
from .semirings import MAX_PLUS, MIN_PLUS, Semiring, parse_semiring
from .solvers import (
    closure_gauss_jordan,
    closure_of_graph,
    solve_bellman_gauss_seidel,
    solve_bellman_jacobi,
    solve_path_problem,
)

__all__ = ["Graph", "format_output", "main", "parse_graph", "run"]


class UsageError(IdemcalcError):
    pass


# -- output ------------------------------------------------------------------


def _json_value(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, tuple):
        return [_json_value(v) for v in x]
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _tsv_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return format_element(x)


def format_output(result, fmt: str = "tsv") -> str:
    """Render a result as TSV or JSON.

    Handles ``{node: value}`` maps, ``{from: {to: value}}`` maps, matrices,
    sampled functions and bare values.  Infinities are written ``inf``/``-inf``.
    """
    if fmt not in ("tsv", "json"):
        raise UsageError(f"unknown format {fmt!r}")
    if isinstance(result, Matrix):
        if fmt == "tsv":
            return format_matrix(result)
        return json.dumps([[_json_value(x) for x in row] for row in result.to_rows()]) + "\n"
    if isinstance(result, SampledFunction):
        pairs = list(zip(result.xs, result.values))
        if fmt == "tsv":
            return "".join(f"{_tsv_value(x)}\t{_tsv_value(v)}\n" for x, v in pairs)
        return json.dumps([{"x": x, "value": _json_value(v)} for x, v in pairs]) + "\n"
    if isinstance(result, dict):
        nested = any(isinstance(v, dict) for v in result.values())
        if nested:
            triples = [(u, v, val) for u, row in result.items() for v, val in row.items()]
            if fmt == "tsv":
                return "".join(f"{u}\t{v}\t{_tsv_value(val)}\n" for u, v, val in triples)
            return json.dumps([{"from": u, "to": v, "value": _json_value(val)}
                               for u, v, val in triples]) + "\n"
        if fmt == "tsv":
            return "".join(f"{node}\t{_tsv_value(val)}\n" for node, val in result.items())
        return json.dumps([{"node": node, "value": _json_value(val)}
                           for node, val in result.items()]) + "\n"
    if fmt == "tsv":
        return _tsv_value(result) + "\n"
    return json.dumps(_json_value(result)) + "\n"


# -- input -------------------------------------------------------------------


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _looks_like_matrix(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or not (parts[0].isdigit() and parts[1].isdigit()):
            return False
        try:
            parse_semiring(parts[2])
        except IdemcalcError:
            return False
        return True
    return False


def _semiring(args, default: Semiring | None = None, allow_deformed: bool = False) -> Semiring | None:
    if args.semiring is None:
        return default
    try:
        s = parse_semiring(args.semiring)
    except IdemcalcError as e:
        raise UsageError(str(e)) from None
    if s.kind == "deformed" and not allow_deformed:
        raise UsageError(f"{s.name} is not idempotent; '{args.command}' does not accept it")
    return s


# -- commands ----------------------------------------------------------------


def cmd_closure(args):
    text = _read(args.input)
    s = _semiring(args)
    if _looks_like_matrix(text):
        A = parse_matrix(text)
        if s is not None and s != A.semiring:
            raise UsageError(f"--semiring {s.name} disagrees with matrix header {A.semiring.name}")
        return closure_gauss_jordan(A)
    return closure_of_graph(parse_graph(text), s or MIN_PLUS)


def _path_command(problem):
    def cmd(args):
        if args.semiring is not None:
            raise UsageError(f"'{problem}' fixes its own semiring; drop --semiring")
        g = parse_graph(_read(args.input))
        return solve_path_problem(g, problem, args.source, args.target)
    return cmd


def cmd_bellman(args):
    A = parse_matrix(_read(args.input))
    if args.rhs is None:
        raise UsageError("bellman needs --rhs with the B matrix")
    B = parse_matrix(_read(args.rhs))
    s = _semiring(args)
    if s is not None and (s != A.semiring or s != B.semiring):
        raise UsageError(f"--semiring {s.name} disagrees with the matrix headers")
    solve = solve_bellman_gauss_seidel if args.method == "gauss-seidel" else solve_bellman_jacobi
    return solve(A, B).X


def _xi_grid(args) -> list[float]:
    if args.xi:
        try:
            return [float(v) for v in args.xi.split(",")]
        except ValueError:
            raise UsageError(f"bad --xi list {args.xi!r}") from None
    lo, hi, step = args.xi_min, args.xi_max, args.xi_step
    if step <= 0 or hi < lo:
        raise UsageError("need xi-min <= xi-max and xi-step > 0")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def cmd_legendre(args):
    s = _semiring(args, MAX_PLUS)
    if s != MAX_PLUS:
        raise UsageError("the Legendre transform is computed over max-plus")
    phi = parse_function_csv(_read(args.input), MAX_PLUS)
    return legendre_transform(phi, _xi_grid(args))


def cmd_integrate(args):
    s = _semiring(args, MAX_PLUS, allow_deformed=True)
    phi = parse_function_csv(_read(args.input), s)
    method = args.method or ("idempotent" if s.idempotent else "riemann")
    if method == "idempotent":
        return idempotent_integral(phi)
    return riemann_universal(phi)


def cmd_axioms(args):
    s = _semiring(args, allow_deformed=True)
    if s is None:
        raise UsageError("axioms needs --semiring")
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    results = check_axioms(s, args.samples, args.seed)
    return s, results


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", help="max-plus, min-plus, max-min, field, deformed:h=<float>, "
                                           "interval-max-plus or interval-min-plus")
    common.add_argument("--input", help="input file (default: stdin)")
    common.add_argument("--output", help="output file (default: stdout)")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")

    parser = argparse.ArgumentParser(prog="idemcalc", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", parents=[common], help="closure A* of a graph or matrix")
    p.set_defaults(func=cmd_closure)

    for problem in ("shortest-path", "widest-path", "transitive-closure"):
        p = sub.add_parser(problem, parents=[common], help=f"{problem} on a TSV graph")
        p.add_argument("--source")
        p.add_argument("--target")
        p.set_defaults(func=_path_command(problem))

    p = sub.add_parser("bellman", parents=[common], help="solve X = AX + B")
    p.add_argument("--rhs", help="matrix file with B")
    p.add_argument("--method", choices=("jacobi", "gauss-seidel"), default="jacobi")
    p.set_defaults(func=cmd_bellman)

    p = sub.add_parser("legendre", parents=[common], help="Legendre transform of a sampled function")
    p.add_argument("--xi", help="comma-separated slopes")
    p.add_argument("--xi-min", type=float, default=-2.0)
    p.add_argument("--xi-max", type=float, default=2.0)
    p.add_argument("--xi-step", type=float, default=0.5)
    p.set_defaults(func=cmd_legendre)

    p = sub.add_parser("integrate", parents=[common], help="integrate a sampled function")
    p.add_argument("--method", choices=("idempotent", "riemann"))
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("axioms", parents=[common], help="randomized check of the semiring laws")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_axioms)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
        if args.command == "axioms":
            s, results = result
            if args.format == "json":
                text = json.dumps({r.name: r.status for r in results}) + "\n"
            else:
                text = format_report(s, results)
            _emit(text, args.output)
            return 0 if all(r.ok for r in results) else 1
        _emit(format_output(result, args.format), args.output)
    except AlgebraError as e:
        print(f"idemcalc: error: {e}", file=sys.stderr)
        return 3
    except (IdemcalcError, OSError) as e:
        print(f"idemcalc: error: {e}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))
