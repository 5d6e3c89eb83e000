"""Fallback marking/extraction kernels built on numpy strided operations.

API-identical to the compiled extension ``cachesieve._kernels``; this module
is the reference for the kernel contracts. All buffers are C-contiguous
numpy arrays owned by the caller.

Bit addressing is byte-granular and LSB-first throughout: bit ``i`` lives in
byte ``i >> 3`` under mask ``1 << (i & 7)``.
"""

import math

import numpy as np


def classical_mark(flags: np.ndarray) -> None:
    """Byte-per-integer sieve over [0, len(flags)-1].

    ``flags`` must be zeroed on entry; afterwards flags[i] == 0 iff i is prime.
    """
    n = flags.shape[0] - 1
    flags[0] = 1
    if n >= 1:
        flags[1] = 1
    for p in range(2, math.isqrt(n) + 1):
        if not flags[p]:
            flags[p * p :: p] = 1


def segment_mark(flags: np.ndarray, seg_low: int, primes: np.ndarray) -> None:
    """Byte-per-integer marking of [seg_low, seg_low + len(flags) - 1].

    ``flags`` zeroed on entry; ``primes`` ascending uint64 covering
    isqrt(segment top). Marking for each p starts at max(p*p, first multiple
    of p >= seg_low).
    """
    high = seg_low + flags.shape[0] - 1
    for p in primes.tolist():
        start = p * p
        if start > high:
            break
        if start < seg_low:
            start = ((seg_low + p - 1) // p) * p
        flags[start - seg_low :: p] = 1


def block_mark(bits: np.ndarray, low: int, span_bits: int, primes: np.ndarray) -> None:
    """Set composite bits in an odd-only bit block (bit i <-> value low + 2i).

    Skips the prime 2 (evens are not stored). For each odd p the first marked
    value is the smallest odd multiple of p >= max(p*p, low); consecutive odd
    multiples differ by 2p, i.e. the bit stride is p.
    """
    top = low + 2 * (span_bits - 1)
    marks = np.zeros(span_bits, dtype=np.uint8)
    for p in primes.tolist():
        if p == 2:
            continue
        start = p * p
        if start > top:
            break
        if start < low:
            start = ((low + p - 1) // p) * p
        if start % 2 == 0:
            start += p
        if start > top:
            continue
        marks[(start - low) >> 1 :: p] = 1
    packed = np.packbits(marks, bitorder="little")
    np.bitwise_or(bits[: packed.size], packed, out=bits[: packed.size])


def flags_extract(flags: np.ndarray, base: int, out: np.ndarray) -> int:
    """Write base+i for every zero byte flags[i] into out; return the count."""
    idx = np.flatnonzero(flags == 0)
    cnt = idx.size
    out[:cnt] = idx
    out[:cnt] += np.uint64(base)
    return cnt


def block_extract(bits: np.ndarray, low: int, span_bits: int, out: np.ndarray) -> int:
    """Write low+2i for every clear bit i < span_bits into out; return the count."""
    nbytes = (span_bits + 7) // 8
    expanded = np.unpackbits(bits[:nbytes], count=span_bits, bitorder="little")
    idx = np.flatnonzero(expanded == 0)
    cnt = idx.size
    out[:cnt] = idx
    view = out[:cnt]
    view += view
    view += np.uint64(low)
    return cnt
