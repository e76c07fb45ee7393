"""``bistable`` command line.

Exit codes: 0 success, 1 bad input (unknown file or fixture, wrong shape),
2 parse error, 3 a size guard suppressed part of the answer, 4 no perfect
matching.  A failing ``verify`` run exits 1.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, Union

from .core import BipartiteGraph, ZeroOneMatrix, format_edge_list, format_matrix, from_graph, load, to_graph
from .errors import BistableError, NoPerfectMatching, ParseError, TooLarge
from .generators import fixture, random_balanced, random_fully_indecomposable, random_with_pm
from .laws import run_suite
from .products import boolean_product, kronecker_product
from .report import analyze
from .structure import block_triangular_form

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_NO_PM = 4

_RANDOM = {
    "random_balanced": random_balanced,
    "random_with_pm": random_with_pm,
    "random_fully_indecomposable": random_fully_indecomposable,
}


class InputError(BistableError):
    pass


def read_input(source: str, as_: Optional[str] = None) -> Union[ZeroOneMatrix, BipartiteGraph]:
    """A file path, or failing that a fixture name such as ``fig5_x`` or ``cycle(4)``."""
    path = Path(source)
    if path.is_file():
        try:
            return load(path, as_)
        except ParseError as exc:
            exc.args = (f"{source}: {exc.args[0]}",)
            raise
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        return fixture(source)
    except BistableError:
        raise InputError(f"{source!r} is neither a readable file nor a fixture name") from None


def _matrix(obj) -> ZeroOneMatrix:
    return from_graph(obj) if isinstance(obj, BipartiteGraph) else obj


def _emit(obj, fmt: Optional[str]) -> str:
    if fmt is None:
        fmt = "bge" if isinstance(obj, BipartiteGraph) else "01m"
    if fmt == "bge":
        return format_edge_list(to_graph(obj) if isinstance(obj, ZeroOneMatrix) else obj)
    return format_matrix(_matrix(obj))


def cmd_analyze(args) -> int:
    report = analyze(read_input(args.input, args.as_), args.input, args.limit)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    if report.suppressed:
        print(f"note: over a size guard: {', '.join(report.suppressed)}", file=sys.stderr)
        return EXIT_GUARD
    return EXIT_OK


def _array(values) -> str:
    return "[" + ",".join(map(str, values)) + "]"


def cmd_decompose(args) -> int:
    x = _matrix(read_input(args.input, args.as_))
    btf = block_triangular_form(x)
    print(f"P={_array(btf.row_perm)}")
    print(f"Q={_array(btf.col_perm)}")
    print(f"blocks={_array(btf.block_sizes)}")
    sys.stdout.write(format_matrix(btf.apply(x)))
    return EXIT_OK


def cmd_product(args) -> int:
    x = _matrix(read_input(args.a, args.as_))
    y = _matrix(read_input(args.b, args.as_))
    z = kronecker_product(x, y) if args.kronecker else boolean_product(x, y)
    sys.stdout.write(format_matrix(z))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.name in _RANDOM:
        if args.n is None:
            raise InputError(f"{args.name} needs --n")
        obj = _RANDOM[args.name](args.n, args.prob, args.seed)
    else:
        obj = fixture(args.name, args.n)
    sys.stdout.write(_emit(obj, args.as_))
    return EXIT_OK


def cmd_verify(args) -> int:
    def show(result):
        print(result.line(), flush=True)

    outcome = run_suite(args.suite, args.seed, args.count, args.max_n, on_result=show)
    failed = sum(not r.passed for r in outcome.results)
    print(f"{len(outcome.results)} laws, {failed} failed")
    return EXIT_OK if outcome.passed else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bistable",
        description="Structure of (0,1)-matrices and bipartite graphs.",
        epilog="Inputs are .01m/.bge files or fixture names (fig5_x, cycle(4), ...).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print every structural property")
    p.add_argument("input")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--as", dest="as_", choices=["01m", "bge"], help="input format, overriding the suffix")
    p.add_argument("--limit", type=int, default=None,
                   help="vertex cap for exhaustive deciders (default: $BISTABLE_MAX_ORACLE or 24)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", help="block triangular form P X Q")
    p.add_argument("input")
    p.add_argument("--as", dest="as_", choices=["01m", "bge"])
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("product", help="Boolean or Kronecker product")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--boolean", action="store_true")
    kind.add_argument("--kronecker", action="store_true")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--as", dest="as_", choices=["01m", "bge"])
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("generate", help="write a fixture or seeded random instance")
    p.add_argument("name", help="fixture name or one of: " + ", ".join(_RANDOM))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--prob", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--as", dest="as_", choices=["01m", "bge"], help="output format")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", choices=["laws", "oracle", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-n", type=int, default=6,
                   help="largest order drawn by the laws suite; the oracle suite stops at 4")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NoPerfectMatching as exc:
        print(f"error: no perfect matching: {exc}", file=sys.stderr)
        return EXIT_NO_PM
    except (BistableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
