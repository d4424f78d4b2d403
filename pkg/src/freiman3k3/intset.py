"""Exact arithmetic on finite integer sets.

``IntSet`` is an immutable sorted tuple of distinct integers.  Normalized sets
(min 0, gcd 1) additionally expose their characteristic bit vector, and their
sumsets run through the shift-or kernels in :mod:`freiman3k3.kernels`.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterable, Union

from . import kernels


@dataclass(frozen=True, eq=False)
class IntSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if not isinstance(els, tuple):
            els = tuple(els)
            object.__setattr__(self, "elements", els)
        for x, y in zip(els, els[1:]):
            if x >= y:
                raise ValueError(f"elements must be strictly increasing: {els!r}")

    @classmethod
    def of(cls, items: Iterable[int]) -> "IntSet":
        return cls(tuple(sorted({int(x) for x in items})))

    @classmethod
    def from_mask(cls, mask: int, offset: int = 0) -> "IntSet":
        return cls(tuple(offset + x for x in kernels.bits(mask)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        i = bisect.bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    @property
    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set")
        return self.elements[0]

    @property
    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set")
        return self.elements[-1]

    @property
    def span(self) -> int:
        return self.max - self.min

    @cached_property
    def mask(self) -> int:
        """Bit vector relative to 0; only for sets of nonnegative integers."""
        if self.elements and self.elements[0] < 0:
            raise ValueError("mask needs nonnegative elements")
        m = 0
        for x in self.elements:
            m |= 1 << x
        return m


SetLike = Union[IntSet, Iterable[int]]


def as_intset(A: SetLike) -> IntSet:
    return A if isinstance(A, IntSet) else IntSet.of(A)


@dataclass(frozen=True, eq=False, repr=False)
class NormalizedSet(IntSet):
    """A set with ``min == 0`` and ``gcd == 1`` (or the singleton ``{0}``)."""

    def __post_init__(self):
        super().__post_init__()
        els = self.elements
        if not els or els[0] != 0:
            raise ValueError(f"normalized set must start at 0: {els!r}")
        if len(els) >= 2 and _gcd_all(els) != 1:
            raise ValueError(f"normalized set must have gcd 1: {els!r}")

    @classmethod
    def from_mask(cls, mask: int, offset: int = 0) -> "NormalizedSet":
        if offset:
            raise ValueError("normalized sets have no offset")
        s = cls(tuple(kernels.bits(mask)))
        s.__dict__["mask"] = mask
        return s

    @property
    def n(self) -> int:
        return self.elements[-1]


@dataclass(frozen=True)
class AffineMap:
    """``x -> offset + scale * x``, sending a normalized set to the original."""

    scale: int
    offset: int

    def __post_init__(self):
        if self.scale == 0:
            raise ValueError("scale must be nonzero")

    def apply(self, A: SetLike) -> IntSet:
        return IntSet.of(self.offset + self.scale * x for x in as_intset(A))

    def invert(self, A: SetLike) -> IntSet:
        out = []
        for x in as_intset(A):
            q, r = divmod(x - self.offset, self.scale)
            if r:
                raise ValueError(f"{x} is not in the image of {self}")
            out.append(q)
        return IntSet.of(out)


class Regime(str, enum.Enum):
    SUB_CRITICAL = "sub_critical"
    CRITICAL = "critical"
    SUPER_CRITICAL = "super_critical"


@dataclass(frozen=True)
class DoublingProfile:
    set_size: int
    sumset_size: int
    b_value: int
    regime: Regime


def _gcd_all(xs: Iterable[int]) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def normalize(A: SetLike) -> tuple[NormalizedSet, AffineMap]:
    A = as_intset(A)
    if not len(A):
        raise ValueError("empty set")
    lo = A.min
    g = _gcd_all(x - lo for x in A) or 1
    return NormalizedSet(tuple((x - lo) // g for x in A)), AffineMap(g, lo)


def sumset(A: SetLike, B: SetLike) -> IntSet:
    A, B = as_intset(A), as_intset(B)
    if not len(A) or not len(B):
        return IntSet(())
    a0, b0 = A.min, B.min
    ma = A.mask if a0 == 0 else _shifted_mask(A, a0)
    mb = B.mask if b0 == 0 else _shifted_mask(B, b0)
    return IntSet.from_mask(kernels.sumset_mask(ma, mb), a0 + b0)


def _shifted_mask(A: IntSet, lo: int) -> int:
    m = 0
    for x in A:
        m |= 1 << (x - lo)
    return m


def count(A: SetLike, x: int, y: int) -> int:
    """``|A ∩ [x, y]|``; an inverted interval counts as empty."""
    if x > y:
        return 0
    els = as_intset(A).elements
    return bisect.bisect_right(els, y) - bisect.bisect_left(els, x)


def affine_image(A: SetLike, scale: int, offset: int) -> IntSet:
    if scale == 0:
        raise ValueError("scale must be nonzero")
    return IntSet.of(offset + scale * a for a in as_intset(A))


def doubling_profile(A: SetLike) -> DoublingProfile:
    A = as_intset(A)
    k = len(A)
    if k < 2:
        raise ValueError("degenerate set")
    s = len(sumset(A, A))
    if s < 3 * k - 3:
        regime = Regime.SUB_CRITICAL
    elif s == 3 * k - 3:
        regime = Regime.CRITICAL
    else:
        regime = Regime.SUPER_CRITICAL
    return DoublingProfile(k, s, s - 2 * k + 1, regime)


def longest_interval_in(S: SetLike) -> tuple[int, int]:
    """Leftmost longest run of consecutive integers in ``S``."""
    S = as_intset(S)
    if not len(S):
        return 0, 0
    lo = S.min
    start, length = kernels.longest_run(S.mask if lo == 0 else _shifted_mask(S, lo))
    return start + lo, length


def sumset_frontiers(A: NormalizedSet) -> tuple[int, int]:
    """``(e, c)``: the last hole of ``2A`` in [-1, n] and the first ``x`` in
    [0, n+1] with ``x + n`` missing from ``2A``."""
    if len(A) < 2:
        raise ValueError("degenerate set")
    n = A.max
    two = kernels.sumset_mask(A.mask, A.mask)
    e = -1
    for x in range(n, -1, -1):
        if not (two >> x) & 1:
            e = x
            break
    c = n + 1
    for x in range(n + 1):
        if not (two >> (x + n)) & 1:
            c = x
            break
    return e, c


def parse_set(text: str) -> IntSet:
    """Parse a literal like ``"0, 1, 2,5"`` (braces optional)."""
    body = text.strip().strip("{}[]() ")
    if not body:
        raise ValueError(f"empty set literal: {text!r}")
    try:
        return IntSet.of(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"bad set literal: {text!r}") from None


def read_sets(arg: str) -> list[IntSet]:
    """A literal, or ``@path`` naming a file with one literal per line."""
    if not arg.startswith("@"):
        return [parse_set(arg)]
    path = Path(arg[1:])
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc
    return [parse_set(line) for line in lines if line.strip() and not line.lstrip().startswith("#")]
