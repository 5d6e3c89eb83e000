# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled marking/extraction kernels.

Mirrors `cachesieve._kernels_py` exactly; see that module for the contracts.
"""

from libc.math cimport sqrt
from libc.stdint cimport uint8_t, uint64_t


cdef uint64_t _isqrt(uint64_t n) noexcept nogil:
    cdef uint64_t r
    if n == 0:
        return 0
    r = <uint64_t> sqrt(<double> n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def classical_mark(uint8_t[::1] flags):
    cdef uint64_t n = <uint64_t> flags.shape[0] - 1
    cdef uint64_t p, m, r
    flags[0] = 1
    if n >= 1:
        flags[1] = 1
    r = _isqrt(n)
    with nogil:
        for p in range(2, r + 1):
            if flags[p] == 0:
                m = p * p
                while m <= n:
                    flags[m] = 1
                    m += p


def segment_mark(uint8_t[::1] flags, uint64_t seg_low, const uint64_t[::1] primes):
    cdef uint64_t high = seg_low + <uint64_t> flags.shape[0] - 1
    cdef Py_ssize_t j
    cdef uint64_t p, start, m
    with nogil:
        for j in range(primes.shape[0]):
            p = primes[j]
            start = p * p
            if start > high:
                break
            if start < seg_low:
                start = ((seg_low + p - 1) // p) * p
            m = start
            while m <= high:
                flags[m - seg_low] = 1
                m += p


def block_mark(uint8_t[::1] bits, uint64_t low, Py_ssize_t span_bits, const uint64_t[::1] primes):
    cdef uint64_t top = low + 2 * (<uint64_t> span_bits - 1)
    cdef Py_ssize_t j, idx
    cdef uint64_t p, start
    with nogil:
        for j in range(primes.shape[0]):
            p = primes[j]
            if p == 2:
                continue
            start = p * p
            if start > top:
                break
            if start < low:
                start = ((low + p - 1) // p) * p
            if (start & 1) == 0:
                start += p
            if start > top:
                continue
            idx = <Py_ssize_t> ((start - low) >> 1)
            while idx < span_bits:
                bits[idx >> 3] |= <uint8_t> (1 << (idx & 7))
                idx += <Py_ssize_t> p


def flags_extract(const uint8_t[::1] flags, uint64_t base, uint64_t[::1] out):
    cdef Py_ssize_t i, cnt = 0
    with nogil:
        for i in range(flags.shape[0]):
            if flags[i] == 0:
                out[cnt] = base + <uint64_t> i
                cnt += 1
    return cnt


def block_extract(const uint8_t[::1] bits, uint64_t low, Py_ssize_t span_bits, uint64_t[::1] out):
    cdef Py_ssize_t idx = 0, cnt = 0
    with nogil:
        while idx < span_bits:
            # whole byte composite: skip 8 bits at once
            if (idx & 7) == 0 and bits[idx >> 3] == 0xFF:
                idx += 8
                continue
            if ((bits[idx >> 3] >> (idx & 7)) & 1) == 0:
                out[cnt] = low + 2 * <uint64_t> idx
                cnt += 1
            idx += 1
    return cnt
