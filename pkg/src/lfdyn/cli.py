"""Command line interface: gen, run, prune-test, bench."""

from __future__ import annotations

import argparse
import sys

from . import _kernel, runner, streams


def _add_kernel_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--kernel",
        default="auto",
        choices=["auto", *_kernel.available()],
        help="kernel implementation (default: compiled when built)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lfdyn",
        description="Fully dynamic maximal independent set / matching harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an update stream")
    gen.add_argument("--model", required=True, choices=streams.MODELS)
    gen.add_argument("--n", type=int, required=True, help="vertex count")
    gen.add_argument("--updates", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output stream path")
    gen.add_argument("--target-edges", type=int, help="mixed: edge count to hover at")
    gen.add_argument("--window", type=int, help="sliding-window: live edge cap")
    gen.add_argument("--hubs", type=int, help="star-flip: hub vertex count")

    run = sub.add_parser("run", help="replay a stream and report statistics")
    run.add_argument("stream", help="stream file path")
    run.add_argument("--mode", required=True, choices=runner.MODES)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument(
        "--verify-every",
        type=int,
        default=0,
        metavar="K",
        help="check against the from-scratch oracle every K updates",
    )
    run.add_argument("--csv", help="write per-update metrics CSV here")
    _add_kernel_arg(run)

    prune = sub.add_parser("prune-test", help="residual degrees after rank pruning")
    prune.add_argument("--n", type=int, required=True)
    prune.add_argument("--avg-degree", type=float, default=32.0)
    prune.add_argument(
        "--p",
        default="0.0625,0.125,0.25",
        help="comma-separated rank thresholds in [0, 1]",
    )
    prune.add_argument("--trials", type=int, default=20)
    prune.add_argument("--seed", type=int, default=0)

    bench = sub.add_parser(
        "bench", help="time dynamic updates vs oracle recomputation"
    )
    bench.add_argument("stream", help="stream file path")
    bench.add_argument("--mode", required=True, choices=runner.MODES)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument(
        "--tail", type=int, help="measure only the last K updates", metavar="K"
    )
    bench.add_argument(
        "--kernel",
        default="all",
        choices=["all", "auto", *_kernel.available()],
        help="which kernels to time (default: every available one)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "gen":
        params = {}
        if args.target_edges is not None:
            params["target_edges"] = args.target_edges
        if args.window is not None:
            params["window"] = args.window
        if args.hubs is not None:
            params["hubs"] = args.hubs
        try:
            stream = streams.generate_stream(
                args.model, args.n, args.updates, args.seed, **params
            )
        except streams.StreamError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        comment = (
            f"lfdyn stream model={args.model} n={args.n} "
            f"updates={args.updates} seed={args.seed}"
        )
        streams.write_stream(args.out, stream, comment)
        print(f"wrote {len(stream)} updates to {args.out}")
        return 0

    if args.command == "run":
        try:
            stream = streams.read_stream(args.stream)
        except (OSError, streams.StreamError) as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        try:
            summary = runner.run(
                stream,
                args.mode,
                args.seed,
                verify_every=args.verify_every,
                csv_path=args.csv,
                kernel=args.kernel,
            )
        except runner.VerificationError as err:
            print(f"verification failed: {err}", file=sys.stderr)
            return 1
        for line in summary.lines():
            print(line)
        return 0

    if args.command == "prune-test":
        try:
            thresholds = [float(x) for x in args.p.split(",") if x]
        except ValueError:
            print(f"error: bad threshold list {args.p!r}", file=sys.stderr)
            return 2
        rows = runner.pruning_test(
            args.n, args.avg_degree, thresholds, args.trials, args.seed
        )
        print("trial  p        mis_resid  mis_maxdeg  mm_resid  mm_maxdeg")
        for r in rows:
            print(
                f"{r.trial:<6} {r.p:<8g} {r.mis_residual:<10} "
                f"{r.mis_max_degree:<11} {r.mm_residual:<9} {r.mm_max_degree}"
            )
        return 0

    if args.command == "bench":
        try:
            stream = streams.read_stream(args.stream)
        except (OSError, streams.StreamError) as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        kernels = None if args.kernel == "all" else [args.kernel]
        report = runner.bench_compare(
            stream, args.mode, args.seed, kernels=kernels, tail=args.tail
        )
        for line in report.lines():
            print(line)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
