import json

import pytest

from freiman3k3.classify import THM_2K1B, THM_BG, THM_FREIMAN2009, THM_MAIN
from freiman3k3.harness import (
    HarnessConfig,
    bg_failures,
    count_normalized,
    enumerate_normalized,
    run_census,
    run_verification,
    scan_span,
)

from oracles import normalized_sets, pair_sums


class TestEnumerate:
    def test_span_four(self):
        assert [tuple(A) for A in enumerate_normalized(4)] == [(0, 1, 4), (0, 1, 2, 4), (0, 3, 4), (0, 1, 3, 4),
                                                               (0, 2, 3, 4), (0, 1, 2, 3, 4)]

    def test_span_one(self):
        assert [tuple(A) for A in enumerate_normalized(1)] == [(0, 1)]

    def test_bad_span(self):
        with pytest.raises(ValueError):
            list(enumerate_normalized(0))

    @pytest.mark.parametrize("n", range(1, 15))
    def test_matches_combinations(self, n):
        got = sorted(tuple(A) for A in enumerate_normalized(n))
        assert got == sorted(normalized_sets(n))
        assert len(got) == count_normalized(n)

    def test_divisor_count(self):
        assert [count_normalized(n) for n in (1, 2, 3, 4, 6, 12)] == [1, 1, 3, 6, 27, 2010]


class TestConfig:
    def test_costly_span_needs_force(self):
        with pytest.raises(ValueError, match="force"):
            HarnessConfig(max_span=26)
        HarnessConfig(max_span=26, force=True)

    @pytest.mark.parametrize("kw", [{"max_span": 1}, {"job_count": 0}, {"min_span": 0},
                                    {"min_span": 9, "max_span": 8}, {"theorems": ("thm_x",)}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            HarnessConfig(**kw)


class TestCensus:
    def test_counts_match_oracle(self):
        report = run_census(HarnessConfig(max_span=10))
        for row in report.rows:
            n = row["n"]
            sets = normalized_sets(n)
            crit = [A for A in sets if len(A) >= 2 and len(pair_sums(A)) == 3 * len(A) - 3]
            sub = [A for A in sets if len(A) >= 2 and len(pair_sums(A)) < 3 * len(A) - 3]
            assert row["total"] == len(sets)
            assert row["regimes"]["critical"] == len(crit)
            assert row["regimes"]["sub_critical"] == len(sub)
            assert sum(row["case_combinations"].values()) == len(crit)
        assert report.violations == []

    def test_k6_row(self):
        row = run_census(HarnessConfig(max_span=10, min_span=10)).rows[0]
        assert row["cases"]["k6"] == 4

    def test_json_round_trip_and_file(self, tmp_path):
        out = tmp_path / "census.json"
        report = run_census(HarnessConfig(max_span=8, output_path=out))
        assert out.read_text() == report.to_json()
        data = json.loads(out.read_text())
        assert data["max_span"] == 8 and len(data["rows"]) == 8

    def test_unwritable_output(self, tmp_path):
        with pytest.raises(OSError, match="cannot write"):
            run_census(HarnessConfig(max_span=3, output_path=tmp_path / "no" / "x.json"))

    def test_parallel_equals_serial(self):
        a = scan_span(15, jobs=1)
        b = scan_span(15, jobs=2)
        assert a == b


class TestVerification:
    def test_clean(self):
        cfg = HarnessConfig(max_span=12, theorems=(THM_2K1B, THM_FREIMAN2009, THM_MAIN))
        assert run_verification(cfg) == []

    def test_bg_small(self):
        met, failures = bg_failures(max_size=4, max_span=6)
        assert met > 0 and failures == []

    def test_bg_weakened_small(self):
        met, failures = bg_failures(max_size=4, max_span=6, weakened=True)
        assert failures == [] and met >= bg_failures(max_size=4, max_span=6)[0]

    def test_bg_only(self):
        cfg = HarnessConfig(max_span=2, theorems=(THM_BG,), bg_max_size=3, bg_max_span=4)
        assert run_verification(cfg) == []
