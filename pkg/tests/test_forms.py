from itertools import combinations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freiman3k3 import NormalizedSet, affine_image, generate_forms, recognize_S, recognize_T
from freiman3k3.forms import minimal_blocks, recognize_T_reflected

from oracles import brute_S_forms, brute_T_forms, normalized_sets, pair_sums

EVEN_SPANS = range(2, 19, 2)


def sets_of(forms):
    return {tuple(A) for A, _ in forms}


class TestRecognizeT:
    def test_listed_example(self):
        (w,) = recognize_T(NormalizedSet((0, 1, 2, 4, 6, 10)))
        assert (w.k, w.blocks[0].elements) == (0, (0, 1, 2, 4, 6))

    def test_k2(self):
        ws = recognize_T(NormalizedSet((0, 2, 4, 5, 7, 10)))
        assert [(w.k, w.blocks[0].elements) for w in ws] == [(2, (4, 5, 7))]

    def test_cardinality_gate(self):
        assert recognize_T(NormalizedSet((0, 2, 3, 4, 7))) == []

    def test_reflected(self):
        A = NormalizedSet(affine_image((0, 1, 2, 4, 6, 10), -1, 10).elements)
        assert recognize_T(A) == []
        (w,) = recognize_T_reflected(A)
        assert w.family == "T_reflected" and w.build(10) == A


class TestRecognizeS:
    def test_example(self):
        (w,) = recognize_S(NormalizedSet((0, 3, 4, 6, 7, 10)))
        assert (w.u, w.blocks[0].elements, w.blocks[1].elements) == (4, (3, 4), (6, 7))

    def test_short_span(self):
        for A in normalized_sets(8):
            assert recognize_S(NormalizedSet(A)) == []

    def test_k6_image_is_not_s(self):
        assert recognize_S(NormalizedSet((0, 1, 2, 5, 6, 10))) == []


class TestGenerate:
    def test_span_six(self):
        assert sets_of(generate_forms(6, "T")) == {(0, 1, 2, 6), (0, 1, 3, 6), (0, 2, 3, 6)}

    def test_listed_t_forms_at_ten(self):
        assert {(0, 1, 2, 3, 4, 10), (0, 1, 3, 4, 7, 10), (0, 1, 2, 5, 6, 10), (0, 1, 2, 4, 6, 10)} <= sets_of(
            generate_forms(10, "T"))

    def test_k6_sets_as_forms(self):
        t = sets_of(generate_forms(10, "T"))
        assert (0, 1, 2, 5, 6, 10) in t and (0, 2, 4, 5, 7, 10) in t

    def test_no_s_below_ten(self):
        assert generate_forms(8, "S") == []

    def test_odd_span(self):
        with pytest.raises(ValueError, match="no forms exist at odd span"):
            generate_forms(7)

    def test_bad_family(self):
        with pytest.raises(ValueError):
            generate_forms(6, "X")

    @pytest.mark.parametrize("n", range(2, 15, 2))
    def test_t_matches_subset_filter(self, n):
        assert sets_of(generate_forms(n, "T")) == brute_T_forms(n)

    @pytest.mark.parametrize("n", range(10, 17, 2))
    def test_s_matches_subset_filter(self, n):
        assert sets_of(generate_forms(n, "S")) == brute_S_forms(n)

    def test_both_is_union(self):
        assert sets_of(generate_forms(12)) == sets_of(generate_forms(12, "T")) | sets_of(generate_forms(12, "S"))

    def test_minimal_blocks_odd_width(self):
        assert minimal_blocks(5, "left") == ()


@pytest.mark.parametrize("n", EVEN_SPANS)
def test_generated_forms_are_critical_with_known_intervals(n):
    for A, w in generate_forms(n):
        two = pair_sums(A)
        assert len(two) == 3 * len(A) - 3, A
        assert 2 * len(A) == n + 2
        lo, hi = (2 * w.k, 2 * w.k + n - 2) if w.family == "T" else (w.u + 2, n + w.u)
        assert all(x in two for x in range(lo, hi + 1)), (A, w)


@pytest.mark.parametrize("n", EVEN_SPANS)
def test_round_trip(n):
    for A, w in generate_forms(n):
        assert w.build(n) == A
        found = recognize_T(A) if w.family == "T" else recognize_S(A)
        assert w in found
        R = NormalizedSet(affine_image(A, -1, n).elements)
        if w.family == "T":
            assert any(r.k == w.k and r.build(n) == R for r in recognize_T_reflected(R))


@pytest.mark.parametrize("n", range(2, 15, 2))
def test_recognizers_accept_only_generated(n):
    t = {(tuple(A), w.k) for A, w in generate_forms(n, "T")}
    s = {(tuple(A), w.u) for A, w in generate_forms(n, "S")}
    for A in normalized_sets(n):
        N = NormalizedSet(A)
        assert {(A, w.k) for w in recognize_T(N)} <= t
        assert {(A, w.u) for w in recognize_S(N)} <= s
    assert {A for A, _ in t} == {A for A in normalized_sets(n) if recognize_T(NormalizedSet(A))}


@pytest.mark.parametrize("n", range(10, 19, 2))
def test_s_family_closed_under_reflection(n):
    forms = {tuple(A): w.u for A, w in generate_forms(n, "S")}
    for A, u in forms.items():
        R = tuple(sorted(n - x for x in A))
        assert forms.get(R) == n - u - 2


@given(st.sampled_from([A for n in range(2, 13, 2) for A, _ in generate_forms(n)]),
       st.integers(-4, 4).filter(bool), st.integers(-30, 30))
def test_cardinality_identity_before_normalization(A, scale, offset):
    raw = affine_image(A, scale, offset)
    lo = min(raw)
    g = 0
    for x in raw:
        g = gcd(g, x - lo)
    assert 2 * g * (len(raw) - 1) == max(raw) - lo


def test_small_sets_have_doubling_at_least_3k_minus_3():
    for v in range(1, 15):
        for A in normalized_sets(v):
            if 2 * len(A) <= v + 3:
                assert len(pair_sums(A)) >= 3 * len(A) - 3, A


def test_small_sets_with_doubling_3k_minus_3_are_biap_or_k6():
    from freiman3k3 import is_biap, k6_witness
    for v in range(1, 15):
        for A in normalized_sets(v):
            if 2 * len(A) <= v + 1 and len(pair_sums(A)) == 3 * len(A) - 3:
                assert is_biap(A) is not None or k6_witness(A) is not None, A


def test_s_form_doubling_from_blocks():
    # |2({0} ∪ C ∪ D ∪ {n})| = 3|A| - 3 computed from the block pieces
    for n in range(10, 17, 2):
        for _, w in generate_forms(n, "S"):
            C, D = w.blocks
            A = (0, *C, *D, n)
            assert len(pair_sums(A)) == 3 * len(A) - 3
