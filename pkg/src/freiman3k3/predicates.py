"""Density, symmetry and minimality predicates on hosted sets, plus the hole
taxonomy of a normalized set.

Half-integer thresholds are compared after doubling: ``B(u, x) > (x-u+1)/2``
is evaluated as ``2*B(u, x) > x-u+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import kernels
from .intset import IntSet, NormalizedSet, SetLike, as_intset, count

Side = Literal["left", "right"]


@dataclass(frozen=True)
class HostedSet:
    set: IntSet
    host_lo: int
    host_hi: int

    def __post_init__(self):
        if not isinstance(self.set, IntSet):
            object.__setattr__(self, "set", as_intset(self.set))
        if self.host_lo > self.host_hi:
            raise ValueError(f"empty host interval [{self.host_lo}, {self.host_hi}]")
        if len(self.set) and (self.set.min < self.host_lo or self.set.max > self.host_hi):
            raise ValueError(f"{self.set} not inside [{self.host_lo}, {self.host_hi}]")

    @property
    def width(self) -> int:
        return self.host_hi - self.host_lo + 1


def hosted(B: SetLike, u: int, v: int) -> HostedSet:
    return HostedSet(as_intset(B), u, v)


@dataclass(frozen=True)
class HoleTaxonomy:
    holes: IntSet
    left_stable: IntSet
    right_stable: IntSet
    unstable: IntSet

    @property
    def h(self) -> int:
        return len(self.holes)

    @property
    def h1(self) -> int:
        return len(self.left_stable)

    @property
    def h2(self) -> int:
        return len(self.right_stable)

    @property
    def h3(self) -> int:
        return len(self.unstable)


@dataclass(frozen=True)
class Frontiers:
    l_star: int
    r_star: int


def _reflect_mask(B: HostedSet) -> tuple[int, int]:
    """Masks of ``B - u`` and its reflection ``(v - u) - (B - u)``."""
    u, w = B.host_lo, B.host_hi - B.host_lo
    m = r = 0
    for b in B.set:
        m |= 1 << (b - u)
        r |= 1 << (w - (b - u))
    return m, r


def is_half_dense(B: HostedSet) -> bool:
    return 2 * len(B.set) == B.width


def is_anti_symmetric(B: HostedSet) -> bool:
    m, r = _reflect_mask(B)
    return m & r == 0 and m | r == (1 << B.width) - 1


def is_dense(B: HostedSet, side: Side) -> bool:
    if not is_half_dense(B):
        return False
    u, v = B.host_lo, B.host_hi
    els = B.set.elements
    if side == "left":
        # prefix counts over [u, x] for x in [u, v-1]
        i = 0
        for x in range(u, v):
            while i < len(els) and els[i] <= x:
                i += 1
            if 2 * i <= x - u + 1:
                return False
        return True
    if side == "right":
        i = 0
        for x in range(v, u, -1):
            while i < len(els) and els[-1 - i] >= x:
                i += 1
            if 2 * i <= v - x + 1:
                return False
        return True
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def is_additively_minimal(B: HostedSet, side: Side) -> bool:
    """Whether the augmented doubling of a dense anti-symmetric block has the
    minimal shape.

    Left: ``2(B ∪ {v+1}) == [2u, u+v-1] ∪ (v+1 + (B ∪ {v+1}))``.
    Right: ``2(B ∪ {u-1}) == [u+v+1, 2v] ∪ (u-1 + (B ∪ {u-1}))``.
    """
    if not (is_dense(B, side) and is_anti_symmetric(B)):
        raise ValueError("not dense/anti-symmetric on required side")
    u, v = B.host_lo, B.host_hi
    # shift everything by u-1 so masks stay nonnegative in both orientations
    base = u - 1
    m = 0
    for b in B.set:
        m |= 1 << (b - base)
    if side == "left":
        ext = m | (1 << (v + 1 - base))
        target = ((1 << (v - u)) - 1) << (2 * u - 2 * base)
        target |= ext << (v + 1 - base)
    else:
        ext = m | 1
        target = ((1 << (v - u)) - 1) << (u + v + 1 - 2 * base)
        target |= ext
    return kernels.sumset_mask(ext, ext) == target


def gaps(A: NormalizedSet) -> list[tuple[int, int]]:
    """Maximal runs of holes, as closed intervals."""
    if len(A) < 2:
        raise ValueError("degenerate set")
    out = []
    els = A.elements
    for x, y in zip(els, els[1:]):
        if y - x > 1:
            out.append((x + 1, y - 1))
    return out


def hole_taxonomy(A: NormalizedSet) -> HoleTaxonomy:
    n = A.max
    if 2 * len(A) <= n + 2:
        raise ValueError("density hypothesis fails")
    two = kernels.sumset_mask(A.mask, A.mask)
    holes, h1, h2, h3 = [], [], [], []
    for x in range(n + 1):
        if x in A:
            continue
        holes.append(x)
        low = (two >> x) & 1
        high = (two >> (x + n)) & 1
        if not low and high:
            h1.append(x)
        elif low and not high:
            h2.append(x)
        elif low and high:
            h3.append(x)
        else:
            raise AssertionError(f"hole {x} of {A} outside the trichotomy")
    return HoleTaxonomy(IntSet(tuple(holes)), IntSet(tuple(h1)), IntSet(tuple(h2)), IntSet(tuple(h3)))


def balanced_holes(A: NormalizedSet) -> IntSet:
    """Holes ``x`` with ``A`` filling exactly half of ``[0, x]`` and of ``[x, n]``.

    When ``|A| = (n+2)/2`` the two equalities already force ``x`` out of ``A``;
    for smaller sets an element can satisfy them, hence the explicit test.
    """
    if len(A) < 2:
        raise ValueError("degenerate set")
    n = A.max
    return IntSet(tuple(
        x for x in range(n + 1)
        if x not in A and 2 * count(A, 0, x) == x + 1 and 2 * count(A, x, n) == n - x + 1
    ))


def stability_frontiers(A: NormalizedSet) -> Frontiers:
    """Largest ``l'`` and ``r'`` in [-1, n] with at most half of ``[0, l']``,
    resp. ``[n-r', n]``, occupied by ``A``."""
    if len(A) < 2:
        raise ValueError("degenerate set")
    n = A.max
    l_star = next(l for l in range(n, -2, -1) if 2 * count(A, 0, l) <= l + 1)
    r_star = next(r for r in range(n, -2, -1) if 2 * count(A, n - r, n) <= r + 1)
    return Frontiers(l_star, r_star)
