"""Exhaustive enumeration of normalized sets, census and theorem campaigns.

Work for span ``n`` is cut into fixed ranges of the interior bits of the
characteristic vector.  Each range is scanned independently (in a worker
process when ``job_count > 1``) and the partial results are merged by
addition, so reports do not depend on the degree of parallelism.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Iterator, Optional, Sequence

from . import kernels
from .classify import (
    THEOREM_IDS,
    THM_2K1B,
    THM_3K3,
    THM_BG,
    THM_FREIMAN2009,
    THM_MAIN,
    TheoremVerdict,
    check_theorem,
    classify,
    verify_report,
)
from .intset import IntSet, NormalizedSet, sumset_frontiers
from .predicates import hole_taxonomy, stability_frontiers

log = logging.getLogger(__name__)

DEFAULT_MAX_SPAN = 18
ACCEPTANCE_MAX_SPAN = 20
COSTLY_SPAN = 26
CHUNK_BITS = 14
EXAMPLE_LIMIT = 10


@dataclass(frozen=True)
class HarnessConfig:
    max_span: int = DEFAULT_MAX_SPAN
    theorems: tuple[str, ...] = THEOREM_IDS
    job_count: int = 1
    output_path: Optional[Path] = None
    min_span: int = 1
    force: bool = False
    bg_max_size: int = 6
    bg_max_span: int = 12

    def __post_init__(self):
        if self.max_span < 2:
            raise ValueError("max_span must be >= 2")
        if self.job_count < 1:
            raise ValueError("job_count must be >= 1")
        if not 1 <= self.min_span <= self.max_span:
            raise ValueError("min_span must lie in [1, max_span]")
        unknown = set(self.theorems) - set(THEOREM_IDS)
        if unknown:
            raise ValueError(f"unknown theorem ids: {sorted(unknown)}")
        if self.max_span >= COSTLY_SPAN and not self.force:
            raise ValueError(
                f"max_span {self.max_span} enumerates ~2^{self.max_span} sets per span; "
                "pass force=True (--force) to run it anyway"
            )


def count_normalized(n: int) -> int:
    """Number of normalized sets of span ``n``, by Möbius inversion over
    the divisors of ``n`` (independent of the enumerator)."""
    if n < 1:
        raise ValueError("span must be >= 1")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * 2 ** (n // d - 1)
    return total


def _mobius(d: int) -> int:
    sign, p = 1, 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if d > 1 else sign


def enumerate_normalized(n: int) -> Iterator[NormalizedSet]:
    """All subsets of [0, n] containing 0 and n with gcd 1, by increasing mask."""
    if n < 1:
        raise ValueError("span must be >= 1")
    multiples = kernels.coprime_filter(n)
    top = 1 << n
    for mid in range(1 << (n - 1)):
        mask = 1 | (mid << 1) | top
        if any(mask & ~mk == 0 for mk in multiples):
            continue
        yield NormalizedSet.from_mask(mask)


def _chunks(n: int) -> list[tuple[int, int, int]]:
    width = n - 1
    step = 1 << min(width, CHUNK_BITS)
    return [(n, lo, lo + step) for lo in range(0, 1 << width, step)]


def _key(A: IntSet) -> str:
    return ",".join(map(str, A))


def _scan_chunk(task: tuple[int, int, int]) -> dict[str, Any]:
    """Scan one chunk; returns counters and sorted lists of offending masks."""
    n, lo, hi = task
    total, sub, crit, sup, critical, thm1_bad, thm3_bad = kernels.scan_span(n, lo, hi)
    out: dict[str, Any] = {
        "counts": Counter(total=total, sub_critical=sub, critical=crit, super_critical=sup),
        "cases": Counter(),
        "combos": Counter(),
        "forms": Counter(),
        "checks": Counter(),
        "thm1_bad": list(thm1_bad),
        "thm3_bad": list(thm3_bad),
        "thm2_bad": [],
        "main_bad": [],
        "hole_identity_bad": [],
        "frontier_lemma_bad": [],
        "frontier_lemma_unguarded": [],
    }
    for mask in critical:
        A = NormalizedSet.from_mask(mask)
        k = len(A)
        report = classify(A)
        cases = report.cases
        for name in cases:
            out["cases"][name] += 1
        out["combos"]["+".join(cases) or "none"] += 1
        if report.forms:
            for fam in sorted({f.family for f in report.forms}):
                out["forms"][fam] += 1
        if not cases or not verify_report(report):
            out["main_bad"].append(mask)
        if not (report.bi_ap or n + 1 <= 2 * k - 1 or report.k6):
            out["thm2_bad"].append(mask)
        if 2 * k > n + 2:
            out["checks"]["hole_identity_checked"] += 1
            tax = hole_taxonomy(A)
            if tax.h1 + tax.h2 + 2 * tax.h3 != k - 2:
                out["hole_identity_bad"].append(mask)
            fr = stability_frontiers(A)
            lemma_ok = _frontier_lemma_holds(A, fr.l_star, fr.r_star)
            if report.bi_ap is None and report.k6 is None:
                out["checks"]["frontier_lemma_checked"] += 1
                if not lemma_ok:
                    out["frontier_lemma_bad"].append(mask)
            elif not lemma_ok:
                out["frontier_lemma_unguarded"].append(mask)
    return out


def _frontier_lemma_holds(A: NormalizedSet, l_star: int, r_star: int) -> bool:
    n, k = A.max, len(A)
    if not l_star < n - r_star:
        return False
    two = kernels.sumset_mask(A.mask, A.mask)
    lo, hi = l_star + 1, 2 * n - r_star - 1
    run = ((1 << (hi - lo + 1)) - 1) << lo
    if two & run != run or hi - lo + 1 < 2 * k - 1:
        return False
    e, c = sumset_frontiers(A)
    return e <= l_star and n - r_star <= c and e < c


def _merge(parts: Sequence[dict[str, Any]]) -> dict[str, Any]:
    merged: dict[str, Any] = {}
    for part in parts:
        for key, value in part.items():
            if isinstance(value, Counter):
                merged.setdefault(key, Counter()).update(value)
            else:
                merged.setdefault(key, []).extend(value)
    for key, value in merged.items():
        if isinstance(value, list):
            value.sort()
    return merged


def _run_tasks(tasks: list[tuple[int, int, int]], jobs: int) -> list[dict[str, Any]]:
    if jobs == 1 or len(tasks) == 1:
        return [_scan_chunk(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_chunk, tasks, chunksize=1))


def scan_span(n: int, jobs: int = 1) -> dict[str, Any]:
    """Merged scan results for every normalized set of span ``n``."""
    return _merge(_run_tasks(_chunks(n), jobs))


def _sets(masks: Sequence[int], limit: Optional[int] = None) -> list[list[int]]:
    masks = masks if limit is None else masks[:limit]
    return [kernels.bits(m) for m in masks]


@dataclass
class CensusReport:
    max_span: int
    rows: list[dict[str, Any]] = field(default_factory=list)

    @property
    def violations(self) -> list[list[int]]:
        return [v for row in self.rows for v in row["violations"]]

    def to_json(self) -> str:
        payload = {
            "max_span": self.max_span,
            "rows": self.rows,
            "violations": self.violations,
            "totals": self.totals(),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def totals(self) -> dict[str, int]:
        out = Counter()
        for row in self.rows:
            out["total"] += row["total"]
            out.update(row["regimes"])
        return dict(out)


def _row(n: int, merged: dict[str, Any]) -> dict[str, Any]:
    counts = merged["counts"]
    return {
        "n": n,
        "total": counts["total"],
        "regimes": {k: counts[k] for k in ("sub_critical", "critical", "super_critical")},
        "cases": {k: merged["cases"].get(k, 0) for k in ("bi_ap", "long_interval", "k6", "forms")},
        "case_combinations": dict(sorted(merged["combos"].items())),
        "forms": {k: merged["forms"].get(k, 0) for k in ("T", "T_reflected", "S")},
        "hole_identity": {
            "checked": merged["checks"]["hole_identity_checked"],
            "violations": _sets(merged["hole_identity_bad"]),
        },
        "frontier_lemma": {
            "checked": merged["checks"]["frontier_lemma_checked"],
            "violations": _sets(merged["frontier_lemma_bad"]),
        },
        "frontier_lemma_unguarded_exceptions": {
            "count": len(merged["frontier_lemma_unguarded"]),
            "examples": _sets(merged["frontier_lemma_unguarded"], EXAMPLE_LIMIT),
        },
        "violations": _sets(merged["main_bad"]),
    }


def run_census(config: HarnessConfig) -> CensusReport:
    report = CensusReport(config.max_span)
    for n in range(config.min_span, config.max_span + 1):
        merged = scan_span(n, config.job_count)
        report.rows.append(_row(n, merged))
        log.info("span %d: %d sets, %d critical", n, merged["counts"]["total"], merged["counts"]["critical"])
    if config.output_path is not None:
        path = Path(config.output_path)
        try:
            path.write_text(report.to_json())
        except OSError as exc:
            raise OSError(f"cannot write census to {path}: {exc.strerror}") from exc
    return report


def bg_candidates(max_size: int, max_span: int) -> list[IntSet]:
    """Sets with min 0, max ``<= max_span`` and ``1..max_size`` elements.

    Sumsets and the hypotheses of the two-set theorem are translation
    invariant, so translates need not be enumerated.
    """
    out = [IntSet((0,))]
    for top in range(1, max_span + 1):
        for size in range(2, max_size + 1):
            for mid in combinations(range(1, top), size - 2):
                out.append(IntSet((0, *mid, top)))
    return out


def bg_failures(max_size: int = 6, max_span: int = 12, weakened: bool = False) -> tuple[int, list[TheoremVerdict]]:
    """``(pairs meeting the hypotheses, failing verdicts)``."""
    sets = bg_candidates(max_size, max_span)
    met, failures = 0, []
    for A in sets:
        ka, sa = len(A), A.span
        for B in sets:
            kb = len(B)
            bound = ka + kb - 2 if weakened and B.span < sa else ka + kb - 3
            if B.span > sa or sa > bound:
                continue
            v = check_theorem(THM_BG, A, B, weakened=weakened)
            if v.hypotheses_met:
                met += 1
                if v.failed:
                    failures.append(v)
    return met, failures


def run_verification(config: HarnessConfig) -> list[TheoremVerdict]:
    """Every failing verdict for the selected theorems; empty on success."""
    wanted = set(config.theorems)
    failures: list[TheoremVerdict] = []
    single = wanted & {THM_2K1B, THM_FREIMAN2009, THM_3K3, THM_MAIN}
    if single:
        for n in range(config.min_span, config.max_span + 1):
            merged = scan_span(n, config.job_count)
            flagged = {
                THM_2K1B: merged["thm1_bad"],
                THM_FREIMAN2009: merged["thm3_bad"],
                THM_3K3: merged["thm2_bad"],
                THM_MAIN: merged["main_bad"],
            }
            for tid in sorted(single):
                for mask in flagged[tid]:
                    A = IntSet(tuple(kernels.bits(mask)))
                    verdict = check_theorem(tid, A)
                    if not verdict.failed:
                        # the fast path flagged it but the checker disagrees
                        verdict = TheoremVerdict(tid, True, False, {**verdict.witness, "kernel_flagged": True})
                    failures.append(verdict)
    if THM_BG in wanted:
        _, bg = bg_failures(config.bg_max_size, config.bg_max_span)
        failures.extend(bg)
    return failures
