# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit-vector kernels, word-sized twin of ``_pycore``.

Masks are unsigned 64-bit words.  ``sumset_mask`` needs both operands below
bit 32 so the result fits; ``scan_span`` needs ``n <= MAX_SPAN``.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_SPAN = 31
MAX_OPERAND_BITS = 32


cdef inline uint64_t _sumset(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t out = 0
    cdef uint64_t t
    if __builtin_popcountll(a) > __builtin_popcountll(b):
        t = a
        a = b
        b = t
    while a:
        out |= b << __builtin_ctzll(a)
        a &= a - 1
    return out


cdef inline int _longest(uint64_t mask, int *start) noexcept nogil:
    cdef int best = 0
    cdef int best_start = 0
    cdef int pos = 0
    cdef int skip, run
    while mask:
        skip = __builtin_ctzll(mask)
        mask >>= skip
        pos += skip
        if mask == 0xFFFFFFFFFFFFFFFFULL:
            run = 64
        else:
            run = __builtin_ctzll(~mask)
        if run > best:
            best = run
            best_start = pos
        if run == 64:
            break
        mask >>= run
        pos += run
    start[0] = best_start
    return best


def sumset_mask(uint64_t a, uint64_t b):
    if a >> MAX_OPERAND_BITS or b >> MAX_OPERAND_BITS:
        raise OverflowError("operand wider than 32 bits")
    return _sumset(a, b)


def longest_run(uint64_t mask):
    cdef int start = 0
    cdef int length = _longest(mask, &start)
    return start, length


def scan_span(int n, uint64_t lo, uint64_t hi):
    if n < 1:
        raise ValueError("span must be >= 1")
    if n > MAX_SPAN:
        raise OverflowError("span exceeds word-sized kernel")
    cdef uint64_t multiples[16]
    cdef int nmult = 0
    cdef int m = n, p = 2, x
    cdef uint64_t mk
    while p * p <= m:
        if m % p == 0:
            mk = 0
            for x in range(0, n + 1, p):
                mk |= (<uint64_t>1) << x
            multiples[nmult] = mk
            nmult += 1
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        mk = 0
        for x in range(0, n + 1, m):
            mk |= (<uint64_t>1) << x
        multiples[nmult] = mk
        nmult += 1

    cdef uint64_t top = (<uint64_t>1) << n
    cdef uint64_t mid, mask, two
    cdef long total = 0, sub = 0, crit = 0, sup = 0
    cdef int k, size2, b, i, start
    cdef bint skip
    critical = []
    thm1_bad = []
    thm3_bad = []
    mid = lo
    while mid < hi:
        mask = 1 | (mid << 1) | top
        mid += 1
        skip = False
        for i in range(nmult):
            if mask & ~multiples[i] == 0:
                skip = True
                break
        if skip:
            continue
        total += 1
        k = __builtin_popcountll(mask)
        two = _sumset(mask, mask)
        size2 = __builtin_popcountll(two)
        if size2 < 3 * k - 3:
            sub += 1
            b = size2 - 2 * k + 1
            if k > 2 and n + 1 > k + b:
                thm1_bad.append(mask)
            if _longest(two, &start) < 2 * k - 1:
                thm3_bad.append(mask)
        elif size2 == 3 * k - 3:
            crit += 1
            critical.append(mask)
        else:
            sup += 1
    return total, sub, crit, sup, critical, thm1_bad, thm3_bad
