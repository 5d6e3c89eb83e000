"""Timing harness with a cross-engine correctness gate and deterministic CSV.

Every (engine, n) pair gets one warm-up run plus ``repeats`` timed runs;
the median is the headline number, the minimum the conventional noise floor.
Before any timing is reported, all engines must agree on prime count and
checksum at every n — benchmarking a wrong sieve is meaningless.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .sieve import ENGINES, ChecksumSink, SieveConfig, run_engine

RUNTIME_HEADER = "engine,n,repeats,seconds_median,seconds_min,prime_count,checksum"
SPEEDUP_HEADER = "n,baseline,ratio"


class CorrectnessError(RuntimeError):
    """Engines disagreed on prime count or checksum for the same bound."""


@dataclass(frozen=True)
class BenchRecord:
    engine: str
    n: int
    repeats: int
    seconds_median: float
    seconds_min: float
    prime_count: int
    checksum: int


@dataclass(frozen=True)
class SpeedupRecord:
    n: int
    baseline: str
    ratio: float


def _ordered_engines(engines) -> list[str]:
    requested = list(engines)
    unknown = [e for e in requested if e not in ENGINES]
    if unknown:
        raise ValueError(f"unknown engines {unknown}; expected from {ENGINES}")
    if not requested:
        raise ValueError("no engines requested")
    return [e for e in ENGINES if e in requested]


def run_bench(
    engines,
    ns,
    repeats: int,
    config: SieveConfig | None = None,
    corrupt_engine: str | None = None,
) -> list[BenchRecord]:
    """One BenchRecord per (engine, n); canonical engine order, n ascending.

    Timing covers sieving plus counting/checksumming only. Engines never
    interleave: all repeats of one pair run back to back.

    ``corrupt_engine`` is a fault-injection hook for tests: it flips the
    named engine's checksums before the agreement check, which must then
    abort the run.
    """
    engines = _ordered_engines(engines)
    ns = sorted(set(ns))
    if not ns:
        raise ValueError("no bounds requested")
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    for n in ns:
        if n < 2:
            raise ValueError(f"benchmark bounds must be >= 2, got {n}")

    records = []
    for engine in engines:
        for n in ns:
            run_engine(engine, n, ChecksumSink(), config)  # warm-up, untimed
            times = []
            sink = ChecksumSink()
            for _ in range(repeats):
                sink = ChecksumSink()
                start = time.perf_counter()
                run_engine(engine, n, sink, config)
                times.append(time.perf_counter() - start)
            checksum = sink.checksum
            if engine == corrupt_engine:
                checksum ^= 1
            records.append(
                BenchRecord(
                    engine=engine,
                    n=n,
                    repeats=repeats,
                    seconds_median=statistics.median(times),
                    seconds_min=min(times),
                    prime_count=sink.count,
                    checksum=checksum,
                )
            )
    _verify_agreement(records)
    return records


def _verify_agreement(records: list[BenchRecord]) -> None:
    by_n: dict[int, list[BenchRecord]] = {}
    for rec in records:
        by_n.setdefault(rec.n, []).append(rec)
    for n, group in by_n.items():
        ref = group[0]
        bad = [
            r
            for r in group[1:]
            if (r.prime_count, r.checksum) != (ref.prime_count, ref.checksum)
        ]
        if bad:
            details = ", ".join(
                f"{r.engine}(count={r.prime_count}, checksum={r.checksum})"
                for r in [ref] + bad
            )
            raise CorrectnessError(f"engines disagree at n={n}: {details}")


def speedup(records: list[BenchRecord], n: int, baseline: str) -> SpeedupRecord:
    """baseline median seconds / hybrid median seconds at the same n."""
    base = _find(records, baseline, n)
    hybrid = _find(records, "hybrid", n)
    return SpeedupRecord(n=n, baseline=baseline, ratio=base.seconds_median / hybrid.seconds_median)


def speedups(records: list[BenchRecord], baselines=("classical", "segmented")) -> list[SpeedupRecord]:
    """All available speedups vs hybrid, baseline-major then n ascending."""
    have = {(r.engine, r.n) for r in records}
    ns = sorted({r.n for r in records if r.engine == "hybrid"})
    result = []
    for baseline in [e for e in ENGINES if e in baselines and e != "hybrid"]:
        for n in ns:
            if (baseline, n) in have:
                result.append(speedup(records, n, baseline))
    return result


def _find(records, engine, n) -> BenchRecord:
    for rec in records:
        if rec.engine == engine and rec.n == n:
            return rec
    raise ValueError(f"no record for engine={engine!r} at n={n}")


def _fmt(value) -> str:
    # repr of a float is the shortest string that round-trips; ints print as-is
    return repr(value) if isinstance(value, float) else str(value)


def write_runtime_csv(records: list[BenchRecord], path) -> None:
    """Deterministic runtime CSV: header, then rows engine-major, n ascending,
    full-precision numbers, '.' decimal separator, LF line endings."""
    rows = sorted(records, key=lambda r: (ENGINES.index(r.engine), r.n))
    lines = [RUNTIME_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    r.engine,
                    r.n,
                    r.repeats,
                    r.seconds_median,
                    r.seconds_min,
                    r.prime_count,
                    r.checksum,
                )
            )
        )
    _write_lines(path, lines)


def write_speedup_csv(speedup_records: list[SpeedupRecord], path) -> None:
    rows = sorted(speedup_records, key=lambda s: (ENGINES.index(s.baseline), s.n))
    lines = [SPEEDUP_HEADER]
    for s in rows:
        lines.append(f"{s.n},{s.baseline},{_fmt(s.ratio)}")
    _write_lines(path, lines)


def _write_lines(path, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def read_runtime_csv(path) -> list[BenchRecord]:
    rows = _read_rows(path, RUNTIME_HEADER, 7)
    return [
        BenchRecord(
            engine=row[0],
            n=int(row[1]),
            repeats=int(row[2]),
            seconds_median=float(row[3]),
            seconds_min=float(row[4]),
            prime_count=int(row[5]),
            checksum=int(row[6]),
        )
        for row in rows
    ]


def read_speedup_csv(path) -> list[SpeedupRecord]:
    rows = _read_rows(path, SPEEDUP_HEADER, 3)
    return [SpeedupRecord(n=int(r[0]), baseline=r[1], ratio=float(r[2])) for r in rows]


def _read_rows(path, header: str, width: int) -> list[list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != header:
        raise ValueError(f"{path}: row 1: expected header {header!r}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != width:
            raise ValueError(f"{path}: row {i}: expected {width} fields, got {len(fields)}")
        rows.append(fields)
    return rows
