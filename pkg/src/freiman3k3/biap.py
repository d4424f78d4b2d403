"""Bi-arithmetic progression detection.

``A = I0 ∪ I1`` is a bi-arithmetic progression of difference ``d`` when both
parts are progressions of difference ``d`` and ``2*I0``, ``I0 + I1``,
``2*I1`` are pairwise disjoint.  For each ``d`` the set splits into maximal
runs inside residue classes mod ``d``; a decomposition needs at most two runs,
or one run cut into a prefix and a suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import kernels
from .intset import IntSet, SetLike, as_intset


@dataclass(frozen=True)
class BiAPWitness:
    difference: int
    prog0: tuple[int, int]
    prog1: tuple[int, int]

    @property
    def i0(self) -> IntSet:
        start, terms = self.prog0
        return IntSet(tuple(start + t * self.difference for t in range(terms)))

    @property
    def i1(self) -> IntSet:
        start, terms = self.prog1
        return IntSet(tuple(start + t * self.difference for t in range(terms)))


def sums_disjoint(i0: IntSet, i1: IntSet) -> bool:
    """The three partial sumsets are pairwise disjoint (direct pair sums)."""
    s00 = {a + b for a in i0 for b in i0}
    s01 = {a + b for a in i0 for b in i1}
    s11 = {a + b for a in i1 for b in i1}
    return not (s00 & s01 or s00 & s11 or s01 & s11)


def _disjoint_masks(lo: int, i0: tuple[int, ...], i1: tuple[int, ...]) -> bool:
    m0 = m1 = 0
    for x in i0:
        m0 |= 1 << (x - lo)
    for x in i1:
        m1 |= 1 << (x - lo)
    s00 = kernels.sumset_mask(m0, m0)
    s01 = kernels.sumset_mask(m0, m1)
    s11 = kernels.sumset_mask(m1, m1)
    return not (s00 & s01 or s00 & s11 or s01 & s11)


def _runs(els: tuple[int, ...], d: int) -> list[tuple[int, ...]]:
    """Maximal chains ``x, x+d, x+2d, ...`` inside ``els``, by first element."""
    present = set(els)
    out = []
    for x in els:
        if x - d in present:
            continue
        run = [x]
        while run[-1] + d in present:
            run.append(run[-1] + d)
        out.append(tuple(run))
    return out


def iter_decompositions(A: SetLike) -> Iterator[BiAPWitness]:
    A = as_intset(A)
    if len(A) < 2:
        raise ValueError("bi-arithmetic progression needs at least 2 elements")
    els = A.elements
    lo = els[0]
    if len(els) == 2:
        # every d works here; the canonical difference is the gap itself
        d = els[1] - els[0]
        yield BiAPWitness(d, (els[0], 1), (els[1], 1))
        return
    for d in range(1, A.span + 1):
        runs = _runs(els, d)
        if len(runs) > 2:
            continue
        if len(runs) == 2:
            splits = [(runs[0], runs[1])]
        else:
            run = runs[0]
            splits = [(run[:j], run[j:]) for j in range(1, len(run))]
        for i0, i1 in splits:
            if _disjoint_masks(lo, i0, i1):
                yield BiAPWitness(d, (i0[0], len(i0)), (i1[0], len(i1)))


def biap_decompositions(A: SetLike) -> list[BiAPWitness]:
    """All decompositions with ``min A`` in ``I0``, ordered by ``d`` then ``I0``."""
    return list(iter_decompositions(A))


def is_biap(A: SetLike) -> Optional[BiAPWitness]:
    return next(iter_decompositions(A), None)
