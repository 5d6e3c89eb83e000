#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends on the same workload.

Runs every engine under every built backend and prints median seconds plus
the compiled-vs-python speedup per cell. Correctness is cross-checked by the
benchmark harness itself.

Usage:
    python3 benchmarks/compare_backends.py --limits 1e6,1e7 --repeats 3
"""

from __future__ import annotations

import argparse

from cachesieve import backends, bench
from cachesieve.cli import _int_list_arg
from cachesieve.sieve import ENGINES


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limits", type=_int_list_arg, default=[10**6, 10**7])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--engines", default=",".join(ENGINES),
                        help="comma-separated engine names")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    engines = [e for e in args.engines.split(",") if e]
    names = backends.available()

    results = {}  # (backend, engine, n) -> median seconds
    for backend in names:
        with backends.use(backend):
            for record in bench.run_bench(engines, args.limits, args.repeats):
                results[(backend, record.engine, record.n)] = record.seconds_median

    width = 12
    header = f"{'engine':<12}{'n':>{width}}"
    for backend in names:
        header += f"{backend:>{width}}"
    if len(names) == 2:
        header += f"{'ratio':>{width}}"
    print(header)
    for engine in engines:
        for n in sorted(set(args.limits)):
            row = f"{engine:<12}{n:>{width},}"
            for backend in names:
                row += f"{results[(backend, engine, n)]:>{width}.4f}"
            if len(names) == 2:
                slow, fast = (results[(names[1], engine, n)], results[(names[0], engine, n)])
                row += f"{slow / fast:>{width}.2f}"
            print(row)
    if len(names) < 2:
        print(f"only the {names[0]} backend is built; no comparison possible")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
