"""Command line front end.

    indsupport extract formula.cnf [--verify] [--no-explicit] ...
    indsupport bench a.cnf b.cnf --timeout 60 [--csv out.csv]
"""

from __future__ import annotations

import argparse
import sys

from .bench import bench, records_to_csv
from .cnf import DimacsError, build_occurrence_list, read_dimacs, parse_dimacs, write_support
from .gates import recover_gates
from .padoa import build_padoa
from .pipeline import PipelineConfig, PipelineTimeout, run_pipeline

EXIT_OK, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2


def _budget(text: str) -> int | None:
    if text.lower() in ("none", "unlimited", "-1"):
        return None
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("conflict limit must be >= 0")
    return value


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--conflict-limit", type=_budget, default=500,
                   help="conflicts per definability query ('unlimited' for none; default 500)")
    p.add_argument("--no-explicit", action="store_true", help="skip gate-based elimination")
    p.add_argument("--no-implicit", action="store_true", help="skip Padoa queries")
    p.add_argument("--simple", action="store_true",
                   help="one solve call per query instead of the integrated search")
    p.add_argument("--xor-max-len", type=int, default=5, choices=range(2, 6))
    p.add_argument("--seed", type=int, default=0)


def _config(args, timeout=None) -> PipelineConfig:
    return PipelineConfig(
        conflict_budget_per_var=args.conflict_limit,
        run_explicit=not args.no_explicit,
        run_implicit=not args.no_implicit,
        use_simple_search=args.simple,
        xor_max_len=args.xor_max_len,
        verify=getattr(args, "verify", False),
        seed=args.seed,
        wall_timeout=timeout,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indsupport",
                                     description="Independent support extraction for projected CNF")
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("extract", help="compute an independent support")
    ex.add_argument("input", help="DIMACS file, or - for stdin")
    _add_pipeline_flags(ex)
    ex.add_argument("--verify", action="store_true", help="check the result by enumeration")
    ex.add_argument("--timeout", type=float, default=None, help="wall timeout in seconds")
    ex.add_argument("--dump-gates", action="store_true", help="print recovered gates as comments")
    ex.add_argument("--dump-padoa", metavar="PATH", help="write the Padoa duplication as DIMACS")
    ex.add_argument("--timings", action="store_true", help="include per-phase seconds")

    b = sub.add_parser("bench", help="run many instances, report CSV and PAR-2")
    b.add_argument("inputs", nargs="+")
    _add_pipeline_flags(b)
    b.add_argument("--timeout", type=float, default=60.0)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    return parser


def _extract(args, out) -> int:
    try:
        f = parse_dimacs(sys.stdin) if args.input == "-" else read_dimacs(args.input)
    except (OSError, DimacsError) as exc:
        print(f"c error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.dump_gates:
        for g in recover_gates(f, args.xor_max_len, build_occurrence_list(f)):
            print(f"c gate {g}", file=out)
    if args.dump_padoa:
        with open(args.dump_padoa, "w") as fh:
            fh.write(build_padoa(f).to_dimacs())

    try:
        result = run_pipeline(f, _config(args, args.timeout))
    except PipelineTimeout as exc:
        for line in exc.result.stat_lines(timings=True):
            print(line, file=out)
        print("c timeout", file=out)
        return EXIT_TIMEOUT
    print(write_support(result), file=out)
    for line in result.stat_lines(timings=args.timings):
        print(line, file=out)
    if result.verified is False:
        return EXIT_ERROR
    return EXIT_OK


def _bench(args, out) -> int:
    records, score = bench(args.inputs, _config(args), args.timeout, args.jobs)
    text = records_to_csv(records)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    print(f"PAR-2: {score:.3f}", file=out if args.csv is None else sys.stdout)
    return EXIT_OK


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    if args.command == "extract":
        return _extract(args, out)
    return _bench(args, out)


if __name__ == "__main__":
    sys.exit(main())
