"""The three sieve engines behind one interface.

* ``classical`` — one byte flag per integer over the whole range, the
  deliberately naive baseline every comparison is measured against.
* ``segmented`` — byte flags processed in cache-sized windows.
* ``hybrid`` — odd-only bit-packed blocks sized to the L1 cache, aligned to
  cache lines, sharing one set of base primes across blocks.

All engines emit the identical prime sequence, in increasing order, through a
:class:`PrimeSink`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import backends
from ._util import ceil_div, is_power_of_two
from .bitpack import OddBitBlock

ENGINES = ("classical", "segmented", "hybrid")

_MASK64 = (1 << 64) - 1
_EXTRACT_CHUNK = 1 << 20


@dataclass(frozen=True)
class SieveConfig:
    """Bound plus cache geometry; derives the hybrid block size.

    ``block_bits`` is the number of odd values per hybrid block and defaults
    to ``l1_bytes * 8`` so one block's flags exactly fill the L1 budget.
    """

    n: int
    l1_bytes: int = 32768
    cache_line_bytes: int = 64
    block_bits: int = 0  # 0 -> l1_bytes * 8

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if not is_power_of_two(self.l1_bytes):
            raise ValueError(f"l1_bytes must be a power of two, got {self.l1_bytes}")
        if not is_power_of_two(self.cache_line_bytes):
            raise ValueError(
                f"cache_line_bytes must be a power of two, got {self.cache_line_bytes}"
            )
        if self.block_bits == 0:
            object.__setattr__(self, "block_bits", self.l1_bytes * 8)
        if self.block_bits < 1:
            raise ValueError(f"block_bits must be >= 1, got {self.block_bits}")

    @property
    def block_bytes(self) -> int:
        """Flag bytes per hybrid block before alignment padding."""
        return ceil_div(self.block_bits, 8)


class BasePrimes:
    """All primes <= isqrt(n), computed once and shared read-only."""

    __slots__ = ("limit", "primes", "primes_u64")

    def __init__(self, limit: int, primes: list[int]):
        self.limit = limit
        self.primes = list(primes)
        self.primes_u64 = np.asarray(self.primes, dtype=np.uint64)

    def __repr__(self) -> str:
        return f"BasePrimes(limit={self.limit}, count={len(self.primes)})"


class PrimeSink:
    """Consumes batches of primes in strictly increasing order.

    ``consume`` receives a uint64 array view that is only valid for the
    duration of the call; implementations that retain primes must copy.
    """

    def consume(self, primes: np.ndarray) -> None:
        raise NotImplementedError


class CountSink(PrimeSink):
    def __init__(self):
        self.count = 0

    def consume(self, primes: np.ndarray) -> None:
        self.count += primes.size


class ChecksumSink(PrimeSink):
    """Counts primes and accumulates their sum modulo 2**64."""

    def __init__(self):
        self.count = 0
        self.checksum = 0

    def consume(self, primes: np.ndarray) -> None:
        self.count += primes.size
        self.checksum = (self.checksum + int(primes.sum(dtype=np.uint64))) & _MASK64


class CollectSink(PrimeSink):
    def __init__(self):
        self.primes: list[int] = []

    def consume(self, primes: np.ndarray) -> None:
        self.primes.extend(primes.tolist())


class WriteSink(PrimeSink):
    """Writes one prime per line, batching a block's worth of text per write."""

    def __init__(self, stream):
        self.stream = stream
        self.count = 0

    def consume(self, primes: np.ndarray) -> None:
        if primes.size:
            self.stream.write("\n".join(map(str, primes.tolist())) + "\n")
            self.count += primes.size


def classical_sieve(n: int) -> list[int]:
    """All primes <= n via the byte-per-integer baseline sieve."""
    sink = CollectSink()
    _run_classical(n, sink)
    return sink.primes


def _run_classical(n: int, sink: PrimeSink) -> int:
    if n < 2:
        return 0
    kernels = backends.get()
    flags = np.zeros(n + 1, dtype=np.uint8)
    kernels.classical_mark(flags)
    out = np.empty(min(n + 1, _EXTRACT_CHUNK), dtype=np.uint64)
    total = 0
    for lo in range(0, n + 1, _EXTRACT_CHUNK):
        cnt = kernels.flags_extract(flags[lo : lo + _EXTRACT_CHUNK], lo, out)
        if cnt:
            sink.consume(out[:cnt])
            total += cnt
    return total


def base_primes(n: int) -> BasePrimes:
    """Primes <= isqrt(n), enough to mark every composite <= n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    limit = math.isqrt(n)
    return BasePrimes(limit, classical_sieve(limit))


def first_odd_multiple(p: int, low: int) -> int:
    """Smallest odd multiple of p that is >= max(low, p*p).

    Marking never needs to start below p*p: any smaller multiple has a
    smaller prime factor and is handled by that prime.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    if low < 3 or low % 2 == 0:
        raise ValueError(f"low must be odd and >= 3, got {low}")
    start = max(low, p * p)
    m = ceil_div(start, p) * p
    if m % 2 == 0:
        m += p
    return m


def sieve_block(block: OddBitBlock, bp: BasePrimes) -> None:
    """Mark every composite in the block using the shared base primes.

    The block must be fresh or cleared; ``bp`` must cover all primes up to
    isqrt(block.top).
    """
    if bp.limit < math.isqrt(block.top):
        raise ValueError(
            f"base primes cover {bp.limit} but the block needs primes "
            f"up to {math.isqrt(block.top)}"
        )
    backends.get().block_mark(block.bits, block.low, block.span_bits, bp.primes_u64)


def hybrid_sieve(config: SieveConfig, sink: PrimeSink) -> int:
    """Blocked odd-only bit-packed sieve; emits 2 first, then every odd prime.

    Blocks run low to high, each spanning ``config.block_bits`` odd numbers
    (the last block truncated at n). Returns the number of primes emitted.
    """
    n = config.n
    if n < 2:
        return 0
    kernels = backends.get()
    sink.consume(np.array([2], dtype=np.uint64))
    total = 1
    if n < 3:
        return total
    bp = base_primes(n)
    top_odd = n if n % 2 else n - 1
    remaining = ((top_odd - 3) >> 1) + 1
    out = np.empty(min(config.block_bits, remaining), dtype=np.uint64)
    low = 3
    while remaining:
        span = min(config.block_bits, remaining)
        block = OddBitBlock(low, span, config.cache_line_bytes)
        sieve_block(block, bp)
        cnt = kernels.block_extract(block.bits, low, span, out)
        if cnt:
            sink.consume(out[:cnt])
            total += cnt
        low += 2 * span
        remaining -= span
    return total


def segmented_sieve(n: int, segment_bytes: int, sink: PrimeSink) -> int:
    """Byte-flag segmented baseline (evens stored too); same output contract
    as the hybrid engine. Returns the number of primes emitted."""
    if segment_bytes < 1:
        raise ValueError(f"segment_bytes must be >= 1, got {segment_bytes}")
    if n < 2:
        return 0
    kernels = backends.get()
    bp = base_primes(n)
    seg = np.empty(min(segment_bytes, n - 1), dtype=np.uint8)
    out = np.empty(seg.size, dtype=np.uint64)
    total = 0
    lo = 2
    while lo <= n:
        length = min(segment_bytes, n - lo + 1)
        view = seg[:length]
        view[:] = 0
        kernels.segment_mark(view, lo, bp.primes_u64)
        cnt = kernels.flags_extract(view, lo, out)
        if cnt:
            sink.consume(out[:cnt])
            total += cnt
        lo += length
    return total


def run_engine(engine: str, n: int, sink: PrimeSink, config: SieveConfig | None = None) -> int:
    """Run the named engine for bound n, streaming primes into the sink."""
    if engine == "classical":
        return _run_classical(n, sink)
    cfg = _effective_config(n, config)
    if engine == "segmented":
        return segmented_sieve(n, cfg.l1_bytes, sink)
    if engine == "hybrid":
        return hybrid_sieve(cfg, sink)
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def count_primes(n: int, engine: str, config: SieveConfig | None = None) -> int:
    """pi(n) via the selected engine with a counting sink."""
    return run_engine(engine, n, CountSink(), config)


def _effective_config(n: int, config: SieveConfig | None) -> SieveConfig:
    if config is None:
        return SieveConfig(n)
    return config if config.n == n else replace(config, n=n)
