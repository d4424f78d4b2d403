import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freiman3k3 import affine_image, find_isomorphism, k6_witness, sum_partition
from freiman3k3.iso import K6_POINTS, isomorphism, preserves_sums

from oracles import brute_isomorphic, pair_sums

B1 = (0, 1, 2, 5, 6, 10)
B2 = (0, 2, 4, 5, 7, 10)


class TestSumPartition:
    def test_one_coincidence(self):
        P = sum_partition([0, 1, 2])
        merged = [c for c in P.pair_classes if len(c) > 1]
        assert merged == [((0, 2), (1, 1))]
        assert len(P.pair_classes) == 5

    def test_sidon(self):
        P = sum_partition([0, 1, 3])
        assert len(P.pair_classes) == 6 and all(len(c) == 1 for c in P.pair_classes)

    def test_k6(self):
        P = sum_partition(K6_POINTS)
        assert sum(len(c) for c in P.pair_classes) == 21
        # independent grouping of coordinate sums
        sums = {}
        for i in range(6):
            for j in range(i, 6):
                s = (K6_POINTS[i][0] + K6_POINTS[j][0], K6_POINTS[i][1] + K6_POINTS[j][1])
                sums.setdefault(s, set()).add((i, j))
        assert {frozenset(c) for c in P.pair_classes} == {frozenset(v) for v in sums.values()}
        # (0,0)+(1,1) = (0,1)+(1,0)
        idx = {p: i for i, p in enumerate(K6_POINTS)}
        table = P.class_table()
        assert table[idx[(0, 0)]][idx[(1, 1)]] == table[idx[(0, 1)]][idx[(1, 0)]]

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            sum_partition([(0, 1), (0, 1)])


class TestFindIsomorphism:
    def test_affine(self):
        w = find_isomorphism(sum_partition([0, 1, 2]), sum_partition([0, 2, 4]))
        assert w is not None

    def test_absent(self):
        assert find_isomorphism(sum_partition([0, 1, 2]), sum_partition([0, 1, 3])) is None
        assert brute_isomorphic([0, 1, 2], [0, 1, 3]) is None

    def test_size_mismatch(self):
        assert find_isomorphism(sum_partition([0, 1]), sum_partition([0, 1, 2])) is None

    def test_k6_family_member(self):
        pairs = isomorphism(list(K6_POINTS), list(B1))
        assert pairs is not None
        # the map (i, j) -> 5i + j is one witness; any witness must preserve sums
        lin = [(p, 5 * p[0] + p[1]) for p in K6_POINTS]
        X, Y = sum_partition(K6_POINTS), sum_partition(B1)
        assert preserves_sums(X, Y, [B1.index(y) for _, y in lin])

    def test_witness_is_verified(self):
        X, Y = sum_partition(B1), sum_partition(B2)
        w = find_isomorphism(X, Y)
        assert w is not None
        assert preserves_sums(X, Y, [w.image(i) for i in range(6)])

    @settings(max_examples=60, deadline=None)
    @given(st.frozensets(st.integers(-12, 12), min_size=1, max_size=7),
           st.integers(-4, 4).filter(bool), st.integers(-20, 20))
    def test_affine_invariance(self, A, scale, offset):
        assert find_isomorphism(sum_partition(sorted(A)), sum_partition(affine_image(A, scale, offset))) is not None

    def test_equivalence_relation(self):
        rng = random.Random(7)
        pool = [tuple(sorted(rng.sample(range(12), rng.randint(3, 6)))) for _ in range(40)]
        parts = {A: sum_partition(A) for A in pool}
        for A in pool:
            assert find_isomorphism(parts[A], parts[A]) is not None
        for _ in range(300):
            A, B, C = rng.sample(pool, 3)
            ab = find_isomorphism(parts[A], parts[B])
            ba = find_isomorphism(parts[B], parts[A])
            assert (ab is None) == (ba is None)
            if ab is not None:
                inverse = [0] * len(A)
                for i, j in ab.mapping:
                    inverse[j] = i
                assert preserves_sums(parts[B], parts[A], inverse)
                if find_isomorphism(parts[B], parts[C]) is not None:
                    assert find_isomorphism(parts[A], parts[C]) is not None

    def test_matches_brute_force_small(self):
        rng = random.Random(11)
        for _ in range(150):
            m = rng.randint(1, 6)
            X = sorted(rng.sample(range(10), m))
            Y = sorted(rng.sample(range(10), m))
            got = find_isomorphism(sum_partition(X), sum_partition(Y)) is not None
            assert got == (brute_isomorphic(X, Y) is not None), (X, Y)


class TestK6:
    def test_b1(self):
        w = k6_witness(B1)
        assert w is not None and w.vertices == (0, 2, 10)

    def test_not_k6(self):
        assert k6_witness([0, 1, 2, 3, 4, 10]) is None
        assert brute_isomorphic(list(K6_POINTS), [0, 1, 2, 3, 4, 10]) is None

    def test_wrong_size(self):
        assert k6_witness([0, 1, 2]) is None

    def test_vertex_properties_on_all_images(self):
        # every K6 image inside [0, 14] containing 0
        from itertools import combinations
        seen = 0
        for mid in combinations(range(1, 15), 5):
            A = (0, *mid)
            if len(pair_sums(A)) != 15:
                continue
            w = k6_witness(A)
            if w is None:
                continue
            seen += 1
            assert min(A) in w.vertices and max(A) in w.vertices
            for i, x in enumerate(w.vertices):
                for y in w.vertices[i:]:
                    assert (x + y) % 2 == 0 and (x + y) // 2 in A
            assert max(A) - min(A) >= 10
        assert seen > 0

    def test_parametric_family(self):
        for a in range(1, 5):
            for b in range(4 * a + 1, 4 * a + 13):
                assert k6_witness([0, a, 2 * a, b, a + b, 2 * b]) is not None, (a, b)
