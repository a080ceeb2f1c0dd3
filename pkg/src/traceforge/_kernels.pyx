# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels for windows of at most 64 bits.

Same contracts as ``_kernels_py``; the dispatcher in ``kernels`` routes any
wider window to the pure-Python twin.
"""

from libc.stdint cimport uint64_t

cdef uint64_t ALL64 = <uint64_t>0xFFFFFFFFFFFFFFFF


cdef inline int _ctz(uint64_t x):
    cdef int n = 0
    while not (x & 1):
        x >>= 1
        n += 1
    return n


cdef inline uint64_t _full(int width):
    if width >= 64:
        return ALL64
    return (<uint64_t>1 << width) - 1


def minkowski(unsigned long long a, unsigned long long b, int width):
    cdef uint64_t acc = 0
    cdef uint64_t bb = b
    cdef uint64_t full = _full(width)
    cdef int j
    while bb:
        j = _ctz(bb)
        acc |= a << j
        bb &= bb - 1
    return acc & full


def colon_window(unsigned long long e_mask, unsigned long long f_mask, int c):
    cdef uint64_t full = _full(c)
    cdef uint64_t comp = (~e_mask) & full
    cdef uint64_t bad = 0
    cdef uint64_t f = f_mask & full
    cdef int j
    while f:
        j = _ctz(f)
        bad |= comp >> j
        f &= f - 1
    return ((~bad) & full) | (<uint64_t>1 << c)


def addition_closed(unsigned long long mask, int width):
    cdef uint64_t m = mask
    cdef uint64_t full = _full(width)
    cdef int j
    while m:
        j = _ctz(m)
        if (mask << j) & (~mask) & full:
            return False
        m &= m - 1
    return True


cdef inline int _ideal_closed(uint64_t s_mask, uint64_t h_mask, uint64_t full):
    cdef uint64_t h = h_mask & full & (ALL64 ^ 1)
    cdef int j
    while h:
        j = _ctz(h)
        if (s_mask << j) & full & (~s_mask):
            return 0
        h &= h - 1
    return 1


def ideal_closed(unsigned long long s_mask, unsigned long long h_mask, int c):
    return bool(_ideal_closed(s_mask, h_mask, _full(c)))


def closed_submasks(unsigned long long pool, unsigned long long h_mask, int c):
    cdef uint64_t sub = pool
    cdef uint64_t full = _full(c)
    out = []
    while True:
        if _ideal_closed(sub, h_mask, full):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & pool
    out.sort()
    return out


def normalize_window(unsigned long long raw, int c):
    cdef int shift = _ctz(raw)
    cdef uint64_t mask
    if shift == 0:
        return 0, raw
    mask = raw >> shift
    mask |= ((<uint64_t>1 << shift) - 1) << (c - shift + 1)
    return shift, mask


def align_shift(unsigned long long mask, int s, int c):
    if s <= 0:
        return mask
    if s > c:
        return (<uint64_t>1 << (c + 1)) - 1
    return (mask >> s) | (((<uint64_t>1 << s) - 1) << (c - s + 1))
