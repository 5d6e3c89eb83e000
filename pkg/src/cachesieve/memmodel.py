"""Analytical memory-access model for the three engines.

Pure arithmetic, no hardware measurement: flag-storage bytes addressed over a
whole run (footprint, not load/store counts), peak resident auxiliary bytes,
and cache lines touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._util import ceil_div, is_power_of_two
from .sieve import ENGINES, SieveConfig

# One bit per odd number: 8x denser than byte flags, and only half the range
# is stored, so the flag footprint per integer of range shrinks 16x.
PACKING_FACTOR = 8
SPAN_RATIO = 16


@dataclass(frozen=True)
class AccessModel:
    engine: str
    n: int
    bytes_touched: int
    resident_bytes: int
    cache_lines_touched: int
    padding_bytes: int


def _check_engine(engine: str) -> None:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def bytes_touched(engine: str, n: int) -> int:
    """Flag-array bytes addressed across a full run up to n.

    Classical and segmented both stream one byte per integer; the hybrid
    stores one bit per odd number, ceil(n/16) bytes over the whole range.
    """
    _check_engine(engine)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if engine == "hybrid":
        return ceil_div(n, 16)
    return n


def resident_bytes(engine: str, config: SieveConfig) -> int:
    """Peak simultaneously-live auxiliary storage.

    Base primes are accounted as the isqrt(n) byte flags used to compute
    them; the segmented engine adds one segment (sized ``config.l1_bytes``,
    the same segment the engine dispatch uses), the hybrid one bit block.
    Alignment padding is reported separately (see :func:`block_padding_bytes`).
    """
    _check_engine(engine)
    n = config.n
    if engine == "classical":
        return n
    if engine == "segmented":
        return math.isqrt(n) + config.l1_bytes
    return math.isqrt(n) + config.block_bytes


def block_padding_bytes(config: SieveConfig) -> int:
    """Bytes added to one hybrid block by rounding up to whole cache lines."""
    payload = config.block_bytes
    return ceil_div(payload, config.cache_line_bytes) * config.cache_line_bytes - payload


def cache_lines_touched(engine: str, n: int, line_bytes: int) -> int:
    if not is_power_of_two(line_bytes):
        raise ValueError(f"line_bytes must be a power of two, got {line_bytes}")
    return ceil_div(bytes_touched(engine, n), line_bytes)


def touched_ratio(n: int) -> float:
    """bytes_touched(classical) / bytes_touched(hybrid); 16 up to rounding."""
    return bytes_touched("classical", n) / bytes_touched("hybrid", n)


def build(engine: str, config: SieveConfig) -> AccessModel:
    """Assemble the full model for one engine under one configuration."""
    n = config.n
    return AccessModel(
        engine=engine,
        n=n,
        bytes_touched=bytes_touched(engine, n),
        resident_bytes=resident_bytes(engine, config),
        cache_lines_touched=cache_lines_touched(engine, n, config.cache_line_bytes),
        padding_bytes=block_padding_bytes(config) if engine == "hybrid" else 0,
    )
