"""The two extremal families of critical sets with ``|A| = (n+2)/2``.

* ``T(k, n) = {0, 2, ..., 2k} ∪ B ∪ {n}`` with ``B`` left dense,
  anti-symmetric and additively minimal in ``[2k, n-1]``, ``0 <= k <= n/2 - 2``.
* ``S(u, n) = {0} ∪ C ∪ D ∪ {n}`` with ``C`` right dense in ``[1, u]`` and
  ``D`` left dense in ``[u+2, n-1]``, both anti-symmetric and additively
  minimal, ``4 <= u <= n-6``.

The S family is closed under ``A -> n - A`` (with ``u -> n-u-2``), so only
T needs a reflected variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Optional

from .intset import IntSet, NormalizedSet, affine_image
from .predicates import (
    HostedSet,
    Side,
    is_additively_minimal,
    is_anti_symmetric,
    is_dense,
)

Family = Literal["T", "T_reflected", "S"]


@dataclass(frozen=True)
class FormWitness:
    """For ``T_reflected`` the parameters describe the T-form ``n - A``."""

    family: Family
    k: Optional[int]
    u: Optional[int]
    blocks: tuple[IntSet, ...]

    def hosts(self, n: int) -> tuple[tuple[int, int], ...]:
        if self.family == "S":
            return ((1, self.u), (self.u + 2, n - 1))
        return ((2 * self.k, n - 1),)

    def build(self, n: int) -> IntSet:
        """Reassemble the set this witness describes."""
        if self.family == "S":
            C, D = self.blocks
            return IntSet.of([0, *C, *D, n])
        (B,) = self.blocks
        T = IntSet.of([*range(0, 2 * self.k + 1, 2), *B, n])
        if self.family == "T_reflected":
            return affine_image(T, -1, n)
        return T


def is_minimal_block(B: HostedSet, side: Side) -> bool:
    """Dense on ``side``, anti-symmetric and additively minimal."""
    return is_dense(B, side) and is_anti_symmetric(B) and is_additively_minimal(B, side)


@lru_cache(maxsize=None)
def minimal_blocks(width: int, side: Side) -> tuple[tuple[int, ...], ...]:
    """Every minimal block hosted in ``[0, width-1]``.

    Anti-symmetric sets hold exactly one point of each pair ``{i, w-1-i}``,
    so the ``2**(width/2)`` choices exhaust the candidates.
    """
    if width <= 0 or width % 2:
        return ()
    half = width // 2
    out = []
    for choice in range(1 << half):
        els = sorted(i if (choice >> i) & 1 else width - 1 - i for i in range(half))
        if is_minimal_block(HostedSet(IntSet(tuple(els)), 0, width - 1), side):
            out.append(tuple(els))
    return tuple(sorted(out))


def _has_form_size(A: NormalizedSet) -> bool:
    return len(A) >= 2 and 2 * len(A) == A.max + 2


def recognize_T(A: NormalizedSet) -> list[FormWitness]:
    if len(A) < 2:
        raise ValueError("degenerate set")
    if not _has_form_size(A):
        return []
    n = A.max
    els = A.elements
    out = []
    for k in range(0, n // 2 - 1):
        prefix = tuple(x for x in els if x < 2 * k)
        if prefix != tuple(range(0, 2 * k, 2)):
            # the even prefix only grows with k
            break
        B = IntSet(tuple(x for x in els if 2 * k <= x <= n - 1))
        if not B.elements or B.elements[0] != 2 * k:
            continue
        if is_minimal_block(HostedSet(B, 2 * k, n - 1), "left"):
            out.append(FormWitness("T", k, None, (B,)))
    return out


def recognize_T_reflected(A: NormalizedSet) -> list[FormWitness]:
    if len(A) < 2:
        raise ValueError("degenerate set")
    n = A.max
    R = NormalizedSet(affine_image(A, -1, n).elements)
    return [FormWitness("T_reflected", w.k, None, w.blocks) for w in recognize_T(R)]


def recognize_S(A: NormalizedSet) -> list[FormWitness]:
    if len(A) < 2:
        raise ValueError("degenerate set")
    if not _has_form_size(A):
        return []
    n = A.max
    out = []
    for u in range(4, n - 5):
        if u + 1 in A:
            continue
        C = IntSet(tuple(x for x in A if 1 <= x <= u))
        D = IntSet(tuple(x for x in A if u + 2 <= x <= n - 1))
        if is_minimal_block(HostedSet(C, 1, u), "right") and is_minimal_block(HostedSet(D, u + 2, n - 1), "left"):
            out.append(FormWitness("S", None, u, (C, D)))
    return out


def generate_forms(n: int, family: Literal["T", "S", "both"] = "both") -> list[tuple[NormalizedSet, FormWitness]]:
    if family not in ("T", "S", "both"):
        raise ValueError(f"family must be T, S or both, got {family!r}")
    if n % 2:
        raise ValueError("no forms exist at odd span")
    if n < 2:
        raise ValueError("span must be >= 2")
    out: list[tuple[NormalizedSet, FormWitness]] = []
    if family in ("T", "both"):
        for k in range(0, n // 2 - 1):
            prefix = list(range(0, 2 * k, 2))
            for blk in minimal_blocks(n - 2 * k, "left"):
                B = IntSet(tuple(2 * k + x for x in blk))
                A = NormalizedSet((*prefix, *B, n))
                out.append((A, FormWitness("T", k, None, (B,))))
    if family in ("S", "both"):
        for u in range(4, n - 5, 2):
            for cb in minimal_blocks(u, "right"):
                C = IntSet(tuple(1 + x for x in cb))
                for db in minimal_blocks(n - u - 2, "left"):
                    D = IntSet(tuple(u + 2 + x for x in db))
                    A = NormalizedSet((0, *C, *D, n))
                    out.append((A, FormWitness("S", None, u, (C, D))))
    return out
