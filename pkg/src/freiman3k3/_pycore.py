"""Pure-Python bit-vector kernels.

A set ``S`` of nonnegative integers is stored as the integer
``sum(1 << s for s in S)``.  Every function here has a twin in ``_core.pyx``
with identical results; the compiled twin is restricted to masks that fit
the word size, this module is not.
"""

from __future__ import annotations

from math import gcd


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def sumset_mask(a: int, b: int) -> int:
    """Shift-or convolution: the mask of ``{x + y : x in a, y in b}``."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out |= b << (low.bit_length() - 1)
        a ^= low
    return out


def longest_run(mask: int) -> tuple[int, int]:
    """Leftmost maximal run of consecutive set bits as ``(start, length)``."""
    best_start, best_len = 0, 0
    pos = 0
    while mask:
        skip = (mask & -mask).bit_length() - 1
        mask >>= skip
        pos += skip
        run = (~mask & (mask + 1)).bit_length() - 1
        if run > best_len:
            best_start, best_len = pos, run
        mask >>= run
        pos += run
    return best_start, best_len


def coprime_filter(n: int) -> list[int]:
    """Masks of the multiples of each prime divisor of ``n`` inside [0, n]."""
    out = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    masks = []
    for p in out:
        mk = 0
        for x in range(0, n + 1, p):
            mk |= 1 << x
        masks.append(mk)
    return masks


def scan_span(n: int, lo: int, hi: int):
    """Scan the normalized sets of span ``n`` whose interior bits lie in [lo, hi).

    Returns ``(total, sub, crit, sup, critical, thm1_bad, thm3_bad)`` where the
    last three are lists of masks: the critical sets, and the sub-critical sets
    violating the ``2k-1+b`` bound or lacking a run of ``2|A|-1`` in ``2A``.
    """
    if n < 1:
        raise ValueError("span must be >= 1")
    multiples = coprime_filter(n)
    top = 1 << n
    total = sub = crit = sup = 0
    critical, thm1_bad, thm3_bad = [], [], []
    for mid in range(lo, hi):
        mask = 1 | (mid << 1) | top
        if any(mask & ~mk == 0 for mk in multiples):
            continue
        total += 1
        k = mask.bit_count()
        two = sumset_mask(mask, mask).bit_count()
        if two < 3 * k - 3:
            sub += 1
            b = two - 2 * k + 1
            if k > 2 and n + 1 > k + b:
                thm1_bad.append(mask)
            if longest_run(sumset_mask(mask, mask))[1] < 2 * k - 1:
                thm3_bad.append(mask)
        elif two == 3 * k - 3:
            crit += 1
            critical.append(mask)
        else:
            sup += 1
    return total, sub, crit, sup, critical, thm1_bad, thm3_bad


def mask_gcd(mask: int) -> int:
    g = 0
    for x in bits(mask):
        g = gcd(g, x)
    return g
