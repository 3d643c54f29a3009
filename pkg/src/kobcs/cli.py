"""Command-line interface: ``kobcs {solve,oracle,reduce,gen,bench,verify}``.

Exit codes: 0 success / feasible, 1 infeasible or bound violation,
2 usage or input error, 3 size-guard refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import BoundViolation, KobcsError, SizeGuardError
from .exact import DEFAULT_LIMIT, exact_comp_k, exact_weighted
from .graph import (
    FORMATS,
    Graph,
    dumps_graph,
    format_vertex_list,
    gen_gnp,
    loads_graph,
    parse_vertex_list,
    random_weights,
)
from .greedy import greedy_dissociation, greedy_k
from .harness import ExperimentSpec, GnpFamily, records_to_csv, run_experiment, summarize, verify
from .local_ratio import local_ratio
from .reductions import (
    compose_to_power,
    lift_through,
    recover_through,
    round_to_independent_set,
    truncate_components,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_graph(args) -> Graph:
    return loads_graph(_read_text(args.graph), args.format)


def _read_solution(path: str, g: Graph) -> frozenset[int]:
    return g.check_vertices(parse_vertex_list(_read_text(path)))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _check_limit(args) -> None:
    if args.limit > DEFAULT_LIMIT and not args.allow_exponential:
        raise SizeGuardError(
            f"--limit above {DEFAULT_LIMIT} needs --allow-exponential (running time is 2^n)"
        )


def cmd_solve(args) -> int:
    g = _read_graph(args)
    trace = None
    if args.algo == "greedy":
        s, trace = greedy_k(g, args.k)
    elif args.algo == "dissociation":
        s, trace = greedy_dissociation(g)
    else:
        if not g.is_weighted:
            print("note: unweighted input, every vertex gets weight 1", file=sys.stderr)
            g = g.unit_weighted()
        s = local_ratio(g, args.k).solution
    value = g.total_weight(s) if args.algo == "local-ratio" else len(s)
    lines = [f"c algo={args.algo} k={args.k} value={value:g}"]
    if args.trace and trace is not None:
        lines += [f"c {line}" for line in trace.report().splitlines()]
    lines.append(format_vertex_list(s))
    _emit(args, "\n".join(lines))
    if trace is not None:
        trace.check()
    return EXIT_OK


def cmd_oracle(args) -> int:
    _check_limit(args)
    g = _read_graph(args)
    fn = exact_weighted if (args.weighted or g.is_weighted) else exact_comp_k
    res = fn(g, args.k, limit=args.limit)
    _emit(
        args,
        f"c value={res.value:g} explored={res.explored}\n{format_vertex_list(res.best_set)}",
    )
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _read_graph(args)
    op = args.op
    if op in ("double", "compose"):
        power = 1 if op == "double" else args.power
        chain = compose_to_power(g, power)
        final = chain[-1].target if chain else g
        if args.lift:
            s = lift_through(chain, _read_solution(args.lift, g), args.k)
            _emit(args, format_vertex_list(s))
        elif args.recover:
            s = recover_through(chain, _read_solution(args.recover, final), args.k)
            _emit(args, format_vertex_list(s))
        else:
            _emit(args, dumps_graph(final, args.format))
        return EXIT_OK
    if not args.solution:
        raise KobcsError(f"--op {op} needs --solution")
    s = _read_solution(args.solution, g)
    if op == "truncate":
        if args.target is None:
            raise KobcsError("--op truncate needs --target")
        out = truncate_components(g, s, args.k, args.target)
    else:
        out = round_to_independent_set(g, s, args.k)
    _emit(args, format_vertex_list(out))
    return EXIT_OK


def cmd_gen(args) -> int:
    g = gen_gnp(args.n, args.p, args.seed)
    if args.weighted:
        g = random_weights(g, args.seed)
    _emit(args, dumps_graph(g, args.format))
    return EXIT_OK


def cmd_bench(args) -> int:
    _check_limit(args)
    spec = ExperimentSpec(
        ks=tuple(args.k),
        algorithms=tuple(args.algos),
        gnp=GnpFamily(args.n, args.p, args.count, args.seed) if args.files == [] else None,
        files=tuple(args.files),
        file_format=args.format,
        seed=args.seed,
        weighted=args.weighted,
        oracle=not args.no_oracle,
        guard=args.limit,
        output=None,
        include_timing=args.timing,
    )
    try:
        records = run_experiment(spec)
        status = EXIT_OK
    except BoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        records, status = exc.records, EXIT_FAIL
    csv_text = records_to_csv(records, args.timing)
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
        print(summarize(records))
    else:
        sys.stdout.write(csv_text)
        print(summarize(records), file=sys.stderr)
    return status


def cmd_verify(args) -> int:
    g = _read_graph(args)
    report = verify(g, _read_solution(args.solution, g), args.k)
    _emit(args, str(report))
    return EXIT_OK if report.feasible else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="dimacs", help="graph file format")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--out", help="write output here instead of stdout")

    limit = argparse.ArgumentParser(add_help=False)
    limit.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest n the exact search accepts")
    limit.add_argument(
        "--allow-exponential", action="store_true", help=f"permit --limit above {DEFAULT_LIMIT}"
    )

    parser = argparse.ArgumentParser(prog="kobcs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="run an approximation algorithm")
    p.add_argument("graph", help="graph file, '-' for stdin")
    p.add_argument("--algo", choices=("greedy", "dissociation", "local-ratio"), default="greedy")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--trace", action="store_true", help="print the degree sequence and inequality checks")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common, limit], help="exact optimum by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--weighted", action="store_true", help="maximize weight (implied for weighted input)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", parents=[common], help="graph transformations and solution maps")
    p.add_argument("graph")
    p.add_argument("--op", choices=("double", "compose", "truncate", "to-is"), required=True)
    p.add_argument("--k", type=int, default=1, help="order bound of the input solution")
    p.add_argument("--power", type=int, default=1, help="number of doublings for --op compose")
    p.add_argument("--target", type=int, help="new order bound for --op truncate")
    p.add_argument("--solution", help="solution file for truncate / to-is")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--lift", metavar="FILE", help="lift a source solution through the doubling")
    group.add_argument("--recover", metavar="FILE", help="recover a source solution from a doubled one")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", parents=[common], help="sample a G(n, p) graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--weighted", action="store_true", help="integer vertex weights in 1..10")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common, limit], help="sweep instances and certify bounds")
    p.add_argument("files", nargs="*", help="graph files (default: a G(n, p) family)")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--k", type=int, nargs="+", default=[2])
    p.add_argument("--algos", nargs="+", default=["greedy", "local-ratio", "oracle"])
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--no-oracle", action="store_true", help="skip optimum-based ratio checks")
    p.add_argument("--timing", action="store_true", help="add a wall-time column (breaks reproducibility)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", parents=[common], help="check a solution's component orders")
    p.add_argument("graph")
    p.add_argument("solution", help="whitespace-separated 1-indexed vertex ids")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except BoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (KobcsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
