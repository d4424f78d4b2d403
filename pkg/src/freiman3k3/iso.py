"""Order-2 Freiman isomorphisms between small additive structures.

Only equality of pair sums matters, so a point set is reduced to its
:class:`SumPartition`: the unordered index pairs ``(i, j)``, ``i <= j``,
grouped by the value of ``p_i + p_j``.  Two point sets are isomorphic exactly
when some bijection of indices carries one partition onto the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence, Union

from .intset import IntSet, SetLike, as_intset

Point = Union[int, tuple[int, ...]]

K6_POINTS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0))
K6_VERTICES: tuple[tuple[int, int], ...] = ((0, 0), (0, 2), (2, 0))


def _add(p: Point, q: Point) -> Point:
    if isinstance(p, tuple):
        return tuple(a + b for a, b in zip(p, q))
    return p + q


@dataclass(frozen=True)
class SumPartition:
    points: tuple[Point, ...]
    pair_classes: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def point_count(self) -> int:
        return len(self.points)

    def class_table(self) -> list[list[int]]:
        """``table[i][j]`` is the class index of the pair ``{i, j}``."""
        m = len(self.points)
        table = [[-1] * m for _ in range(m)]
        for c, pairs in enumerate(self.pair_classes):
            for i, j in pairs:
                table[i][j] = table[j][i] = c
        return table


def sum_partition(points: Union[SetLike, Sequence[Point]]) -> SumPartition:
    if isinstance(points, IntSet):
        pts: tuple[Point, ...] = points.elements
    else:
        pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    dims = {len(p) if isinstance(p, tuple) else 1 for p in pts}
    if len(dims) > 1:
        raise ValueError("points of mixed dimension")
    groups: dict = {}
    for i, j in combinations_with_replacement(range(len(pts)), 2):
        groups.setdefault(_add(pts[i], pts[j]), []).append((i, j))
    # classes ordered by their first pair so the partition is canonical
    classes = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    return SumPartition(pts, tuple(classes))


@dataclass(frozen=True)
class IsoWitness:
    """Index pairs ``(i, j)``: source point ``i`` maps to target point ``j``."""

    mapping: tuple[tuple[int, int], ...]

    def image(self, i: int) -> int:
        return dict(self.mapping)[i]


def _signature(table: list[list[int]], sizes: list[int], i: int) -> tuple[int, ...]:
    return tuple(sorted(sizes[c] for c in table[i]))


def preserves_sums(X: SumPartition, Y: SumPartition, perm: Sequence[int]) -> bool:
    """Full quadruple check: ``{i,j} ~ {k,l}`` in X iff their images are in Y."""
    tx, ty = X.class_table(), Y.class_table()
    m = len(perm)
    pairs = [(i, j) for i in range(m) for j in range(i, m)]
    for a, (i, j) in enumerate(pairs):
        for k, l in pairs[a + 1:]:
            same_x = tx[i][j] == tx[k][l]
            same_y = ty[perm[i]][perm[j]] == ty[perm[k]][perm[l]]
            if same_x != same_y:
                return False
    return True


def find_isomorphism(X: SumPartition, Y: SumPartition) -> Optional[IsoWitness]:
    m = X.point_count
    if m != Y.point_count:
        return None
    if sorted(map(len, X.pair_classes)) != sorted(map(len, Y.pair_classes)):
        return None
    tx, ty = X.class_table(), Y.class_table()
    sx = [len(c) for c in X.pair_classes]
    sy = [len(c) for c in Y.pair_classes]
    sig_x = [_signature(tx, sx, i) for i in range(m)]
    sig_y = [_signature(ty, sy, j) for j in range(m)]
    if sorted(sig_x) != sorted(sig_y):
        return None

    # most constrained points first: those in many coincident pairs
    order = sorted(range(m), key=lambda i: (-sum(1 for s in sig_x[i] if s > 1), i))
    candidates = [[j for j in range(m) if sig_y[j] == sig_x[i]] for i in range(m)]
    image = [-1] * m
    used = [False] * m
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}

    def place(depth: int) -> bool:
        if depth == m:
            return True
        i = order[depth]
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            added = []
            ok = True
            for prev in order[: depth + 1]:
                cx = tx[i][prev]
                cy = ty[j][image[prev]]
                fx = fwd.get(cx)
                by = bwd.get(cy)
                if fx is None and by is None:
                    fwd[cx] = cy
                    bwd[cy] = cx
                    added.append(cx)
                elif fx != cy or by != cx:
                    ok = False
                    break
            if ok:
                used[j] = True
                if place(depth + 1):
                    return True
                used[j] = False
            for cx in added:
                del bwd[fwd.pop(cx)]
            image[i] = -1
        return False

    if not place(0):
        return None
    if not preserves_sums(X, Y, image):
        raise AssertionError("search produced a map that does not preserve sums")
    return IsoWitness(tuple((i, image[i]) for i in range(m)))


def isomorphism(X: Union[SetLike, Sequence[Point]], Y: Union[SetLike, Sequence[Point]]):
    """Element-level convenience: a list of ``(x, y)`` pairs, or ``None``."""
    px, py = sum_partition(X), sum_partition(Y)
    w = find_isomorphism(px, py)
    if w is None:
        return None
    return [(px.points[i], py.points[j]) for i, j in w.mapping]


@dataclass(frozen=True)
class K6Witness:
    mapping: tuple[tuple[tuple[int, int], int], ...]
    vertices: tuple[int, int, int]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.mapping)


_K6 = sum_partition(K6_POINTS)


def k6_witness(A: SetLike) -> Optional[K6Witness]:
    A = as_intset(A)
    if len(A) != 6:
        return None
    w = find_isomorphism(_K6, sum_partition(A))
    if w is None:
        return None
    mapping = tuple((K6_POINTS[i], A.elements[j]) for i, j in w.mapping)
    images = dict(mapping)
    vertices = tuple(sorted(images[v] for v in K6_VERTICES))
    return K6Witness(mapping, vertices)
