"""Bit-packed, cache-line-aligned composite flags for odd numbers."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from . import backends
from ._util import ceil_div, is_power_of_two

WORD_BITS = 64
WORD_BYTES = 8


def aligned_zero_bytes(nbytes: int, alignment: int) -> np.ndarray:
    """Zeroed uint8 array whose data pointer is a multiple of ``alignment``.

    Over-allocates by one alignment unit and returns an offset view; the view
    keeps the backing buffer alive.
    """
    buf = np.zeros(nbytes + alignment, dtype=np.uint8)
    offset = (-buf.ctypes.data) % alignment
    return buf[offset : offset + nbytes]


class OddBitBlock:
    """Composite flags for the odd numbers low, low+2, ..., low+2*(span_bits-1).

    Bit i covers the value low + 2*i; a set bit means composite, so a fresh
    (all-zero) block treats every covered value as a prime candidate. Bits are
    packed LSB-first. Storage is rounded up to whole alignment units and the
    first byte sits on an ``alignment_bytes`` boundary.
    """

    __slots__ = ("low", "span_bits", "alignment_bytes", "bits")

    def __init__(self, low: int, span_bits: int, alignment_bytes: int = 64):
        if low < 3 or low % 2 == 0:
            raise ValueError(f"block low must be odd and >= 3, got {low}")
        if span_bits < 1:
            raise ValueError(f"span_bits must be >= 1, got {span_bits}")
        if alignment_bytes < WORD_BYTES or not is_power_of_two(alignment_bytes):
            raise ValueError(
                f"alignment_bytes must be a power of two >= {WORD_BYTES}, "
                f"got {alignment_bytes}"
            )
        self.low = low
        self.span_bits = span_bits
        self.alignment_bytes = alignment_bytes
        padded = ceil_div(ceil_div(span_bits, 8), alignment_bytes) * alignment_bytes
        self.bits = aligned_zero_bytes(padded, alignment_bytes)

    @property
    def top(self) -> int:
        """Highest value represented."""
        return self.low + 2 * (self.span_bits - 1)

    @property
    def words(self) -> np.ndarray:
        """Storage as 64-bit words (zero-copy view of ``bits``)."""
        return self.bits.view(np.uint64)

    @property
    def payload_bytes(self) -> int:
        """Bytes needed for the flags alone: ceil(span_bits / 8)."""
        return ceil_div(self.span_bits, 8)

    @property
    def storage_bytes(self) -> int:
        """Allocated bytes (payload rounded up to whole alignment units)."""
        return self.bits.nbytes

    def bit_index(self, v: int) -> int:
        """Index of the bit covering v: (v - low) / 2."""
        self._check(v)
        return (v - self.low) >> 1

    def mark_composite(self, v: int) -> None:
        i = self.bit_index(v)
        self.bits[i >> 3] |= 1 << (i & 7)

    def is_candidate(self, v: int) -> bool:
        i = self.bit_index(v)
        return not (self.bits[i >> 3] >> (i & 7)) & 1

    def iter_candidates(self) -> Iterator[int]:
        """Yield every candidate value, strictly increasing."""
        raw = self.bits.tolist()
        low = self.low
        for i in range(self.span_bits):
            if not (raw[i >> 3] >> (i & 7)) & 1:
                yield low + 2 * i

    def candidates(self) -> np.ndarray:
        """All candidate values as a fresh uint64 array, strictly increasing."""
        out = np.empty(self.span_bits, dtype=np.uint64)
        cnt = backends.get().block_extract(self.bits, self.low, self.span_bits, out)
        return out[:cnt].copy()

    def clear(self) -> None:
        """Reset every flag to candidate."""
        self.bits[:] = 0

    def _check(self, v: int) -> None:
        if v % 2 == 0:
            raise ValueError(f"even value {v} is not stored in an odd-only block")
        if not self.low <= v <= self.top:
            raise ValueError(f"value {v} outside block [{self.low}, {self.top}]")

    def __repr__(self) -> str:
        return (
            f"OddBitBlock(low={self.low}, span_bits={self.span_bits}, "
            f"alignment_bytes={self.alignment_bytes})"
        )
