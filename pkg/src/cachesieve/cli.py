"""Command line front door: generate/count primes, benchmark, model output.

Exit codes: 0 success, 1 runtime or correctness failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal, InvalidOperation

from . import backends, bench, memmodel
from .bench import CorrectnessError
from .sieve import ENGINES, ChecksumSink, SieveConfig, WriteSink, count_primes, run_engine


def _int_arg(text: str) -> int:
    """Integer, also accepting scientific shorthand like 1e7."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value != value.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _int_list_arg(text: str) -> list[int]:
    items = [t for t in text.split(",") if t]
    if not items:
        raise argparse.ArgumentTypeError("empty list")
    return [_int_arg(t) for t in items]


def _engine_list_arg(text: str) -> list[str]:
    names = [t for t in text.split(",") if t]
    unknown = [e for e in names if e not in ENGINES]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown engines {unknown}; choose from {', '.join(ENGINES)}"
        )
    if not names:
        raise argparse.ArgumentTypeError("empty engine list")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cachesieve",
        description="Prime sieving: classical, segmented, and cache-blocked "
        "bit-packed hybrid engines, with a benchmark harness and an "
        f"analytical memory model (kernel backend: {backends.name()}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    primes = sub.add_parser("primes", help="count, print, or checksum primes up to a limit")
    primes.add_argument("--limit", type=_int_arg, required=True, help="upper bound N (e.g. 1e7)")
    primes.add_argument("--engine", choices=ENGINES, default="hybrid")
    primes.add_argument("--mode", choices=("count", "print", "checksum"), default="count")
    primes.add_argument("--block-bits", type=_int_arg, default=0, help="odd numbers per hybrid block")
    primes.add_argument("--l1-bytes", type=_int_arg, default=32768)

    bench_p = sub.add_parser("bench", help="time the engines and export CSV")
    bench_p.add_argument("--limits", type=_int_list_arg, required=True, help="comma-separated bounds (e.g. 1e6,1e7)")
    bench_p.add_argument("--engines", type=_engine_list_arg, default=list(ENGINES))
    bench_p.add_argument("--repeats", type=_int_arg, default=5)
    bench_p.add_argument("--csv", metavar="PATH", help="write runtime CSV here")
    bench_p.add_argument("--speedup-csv", metavar="PATH", help="write speedup CSV here")
    bench_p.add_argument("--block-bits", type=_int_arg, default=0)
    bench_p.add_argument("--l1-bytes", type=_int_arg, default=32768)
    bench_p.add_argument("--corrupt-engine", help=argparse.SUPPRESS)  # fault injection for tests

    model = sub.add_parser("model", help="print predicted memory traffic per engine")
    model.add_argument("--limit", type=_int_arg, required=True)
    model.add_argument("--l1-bytes", type=_int_arg, default=32768)
    model.add_argument("--line-bytes", type=_int_arg, default=64)
    model.add_argument("--csv", metavar="PATH", help="also write the table as CSV")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "primes":
            return _cmd_primes(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_model(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CorrectnessError as exc:
        print(f"correctness failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _cmd_primes(args) -> int:
    n = args.limit
    if n < 0:
        raise ValueError(f"limit must be >= 0, got {n}")
    config = SieveConfig(n=n, l1_bytes=args.l1_bytes, block_bits=args.block_bits)
    if args.mode == "count":
        print(count_primes(n, args.engine, config))
    elif args.mode == "print":
        run_engine(args.engine, n, WriteSink(sys.stdout), config)
    else:
        sink = ChecksumSink()
        run_engine(args.engine, n, sink, config)
        print(f"count={sink.count}")
        print(f"checksum={sink.checksum}")
    return 0


def _cmd_bench(args) -> int:
    config = SieveConfig(n=0, l1_bytes=args.l1_bytes, block_bits=args.block_bits)
    records = bench.run_bench(
        args.engines,
        args.limits,
        args.repeats,
        config,
        corrupt_engine=args.corrupt_engine,
    )
    _print_bench_table(records)
    if args.csv:
        bench.write_runtime_csv(records, args.csv)
        print(f"runtime CSV written to {args.csv}")
    if args.speedup_csv:
        bench.write_speedup_csv(bench.speedups(records), args.speedup_csv)
        print(f"speedup CSV written to {args.speedup_csv}")
    return 0


def _print_bench_table(records) -> None:
    """One row per bound, one column per engine, median seconds."""
    engines = [e for e in ENGINES if any(r.engine == e for r in records)]
    ns = sorted({r.n for r in records})
    cell = {(r.engine, r.n): r.seconds_median for r in records}
    width = 12
    print(f"{'N':>{width}}" + "".join(f"{e:>{width}}" for e in engines))
    for n in ns:
        row = f"{n:>{width},}"
        for e in engines:
            row += f"{cell[(e, n)]:>{width}.4f}"
        print(row)


def _cmd_model(args) -> int:
    n = args.limit
    if n < 2:
        raise ValueError(f"limit must be >= 2, got {n}")
    config = SieveConfig(n=n, l1_bytes=args.l1_bytes, cache_line_bytes=args.line_bytes)
    models = [memmodel.build(engine, config) for engine in ENGINES]
    width = 16
    print(
        f"{'engine':<12}{'bytes_touched':>{width}}{'resident_bytes':>{width}}"
        f"{'cache_lines':>{width}}{'padding':>{width}}"
    )
    for m in models:
        print(
            f"{m.engine:<12}{m.bytes_touched:>{width},}{m.resident_bytes:>{width},}"
            f"{m.cache_lines_touched:>{width},}{m.padding_bytes:>{width},}"
        )
    print(f"bit packing: {memmodel.PACKING_FACTOR}x per stored number")
    print(
        f"classical/hybrid bytes touched: {memmodel.touched_ratio(n):.2f} "
        f"(x{memmodel.SPAN_RATIO} including skipped evens)"
    )
    if args.csv:
        _write_model_csv(models, args.csv)
        print(f"model CSV written to {args.csv}")
    return 0


def _write_model_csv(models, path) -> None:
    lines = ["engine,n,bytes_touched,resident_bytes,cache_lines_touched,padding_bytes"]
    for m in models:
        lines.append(
            f"{m.engine},{m.n},{m.bytes_touched},{m.resident_bytes},"
            f"{m.cache_lines_touched},{m.padding_bytes}"
        )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    sys.exit(main())
