"""Command-line front end: evaluate, show, size, compile, bench.

Exit codes: 0 on success, 2 for parse/usage errors, 3 for evaluation errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from statistics import median

from .dag import build_dag, format_dag
from .generators import mul, mul_shared
from .interp import UnboundVariableError, env_from_pairs, evaluate, print_let, size
from .netlist import emit_netlist, emit_threeaddr
from .parser import ParseError, elaborate, parse


def _read_program(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _program_from(args) -> object:
    ast = parse(_read_program(args.file))
    return lambda builder: elaborate(ast, builder)


def _var_binding(text: str) -> tuple[str, int]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"value for {name!r} must be an integer") from None


def _cmd_eval(args) -> int:
    program = _program_from(args)
    print(evaluate(program, env_from_pairs(args.var)))
    return 0


def _cmd_show(args) -> int:
    print(print_let(_program_from(args)))
    return 0


def _cmd_size(args) -> int:
    print(size(_program_from(args)))
    return 0


def _cmd_compile(args) -> int:
    program = _program_from(args)
    root, dag = build_dag(program)
    if args.format == "dag":
        print(format_dag(root, dag))
    elif args.format == "netlist":
        sys.stdout.write(emit_netlist(dag, [root]))
    else:
        sys.stdout.write(emit_threeaddr(dag, root))
    return 0


_GENERATORS = {"mul": mul, "mul-shared": mul_shared}


def _cmd_bench(args) -> int:
    generator = _GENERATORS[args.gen]

    def program(builder):
        return generator(builder, args.n, builder.variable("i"))

    times_ms = []
    nodes = 0
    for _ in range(args.repeat):
        start = time.perf_counter()
        _root, dag = build_dag(program)
        times_ms.append((time.perf_counter() - start) * 1000.0)
        nodes = len(dag)
    print(f"{args.gen},{args.n},{nodes},{median(times_ms):.3f}")
    return 0


def _build_arg_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="exprdag",
        description="Compile and run a small arithmetic DSL with explicit sharing.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", nargs="?", default="-", help="program file, or - for stdin")

    p_eval = sub.add_parser("eval", help="evaluate a program")
    add_file(p_eval)
    p_eval.add_argument(
        "--var",
        action="append",
        type=_var_binding,
        default=[],
        metavar="NAME=VALUE",
        help="bind a free variable (repeatable; first binding of a name wins)",
    )
    p_eval.set_defaults(func=_cmd_eval)

    p_show = sub.add_parser("show", help="print a program with its sharing as let bindings")
    add_file(p_show)
    p_show.set_defaults(func=_cmd_show)

    p_size = sub.add_parser("size", help="count constructors, shared subterms once")
    add_file(p_size)
    p_size.set_defaults(func=_cmd_size)

    p_compile = sub.add_parser("compile", help="compile to a chosen representation")
    add_file(p_compile)
    p_compile.add_argument(
        "--format",
        choices=("dag", "netlist", "threeaddr"),
        default="netlist",
        help="output representation (default: netlist)",
    )
    p_compile.set_defaults(func=_cmd_compile)

    p_bench = sub.add_parser("bench", help="time DAG construction for a generated workload")
    p_bench.add_argument("--gen", choices=sorted(_GENERATORS), required=True)
    p_bench.add_argument("--n", type=int, required=True, help="multiplier (n >= 0)")
    p_bench.add_argument("--repeat", type=int, default=5, help="runs to take the median of")
    p_bench.set_defaults(func=_cmd_bench)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_arg_parser()
    args = parser.parse_args(argv)
    if args.command == "bench":
        if args.n < 0:
            parser.error("--n must be >= 0")
        if args.repeat < 1:
            parser.error("--repeat must be >= 1")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnboundVariableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
