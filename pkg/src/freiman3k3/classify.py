"""Certificate-producing classification of critical sets and the theorem checkers.

:func:`classify` reports every structural case that holds for a set (the
cases overlap), each with a certificate on the normalized set.
:func:`verify_report` re-checks those certificates from raw pair sums,
independently of the kernels that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .biap import BiAPWitness, is_biap, sums_disjoint
from .forms import FormWitness, is_minimal_block, recognize_S, recognize_T, recognize_T_reflected
from .intset import (
    AffineMap,
    DoublingProfile,
    IntSet,
    NormalizedSet,
    Regime,
    SetLike,
    as_intset,
    doubling_profile,
    longest_interval_in,
    normalize,
    sumset,
)
from .iso import K6_POINTS, K6Witness, k6_witness
from .predicates import HostedSet

THM_2K1B = "thm_2k1b"
THM_3K3 = "thm_3k3"
THM_FREIMAN2009 = "thm_freiman2009"
THM_BG = "thm_bg"
THM_MAIN = "thm_main"
THEOREM_IDS = (THM_2K1B, THM_3K3, THM_FREIMAN2009, THM_BG, THM_MAIN)

CASE_NAMES = ("bi_ap", "long_interval", "k6", "forms")


@dataclass(frozen=True)
class CaseReport:
    input: IntSet
    normalized: NormalizedSet
    affine: AffineMap
    profile: DoublingProfile
    bi_ap: Optional[BiAPWitness] = None
    long_interval: Optional[tuple[int, int]] = None
    k6: Optional[K6Witness] = None
    forms: Optional[tuple[FormWitness, ...]] = None

    @property
    def cases(self) -> tuple[str, ...]:
        return tuple(name for name in CASE_NAMES if getattr(self, name) is not None)

    def long_progression(self) -> Optional[tuple[int, int, int]]:
        """The case-2 certificate in input coordinates: ``(start, step, length)``
        of an arithmetic progression inside ``A + A``."""
        if self.long_interval is None:
            return None
        start, length = self.long_interval
        return 2 * self.affine.offset + self.affine.scale * start, self.affine.scale, length

    def to_json(self) -> dict[str, Any]:
        bi = None
        if self.bi_ap is not None:
            bi = {"d": self.bi_ap.difference, "i0": list(self.bi_ap.i0), "i1": list(self.bi_ap.i1)}
        li = None
        if self.long_interval is not None:
            li = {"start": self.long_interval[0], "length": self.long_interval[1]}
        k6 = None
        if self.k6 is not None:
            k6 = {
                "mapping": [[p[0], p[1], x] for p, x in self.k6.mapping],
                "vertices": list(self.k6.vertices),
            }
        forms = None
        if self.forms is not None:
            forms = [
                {"family": f.family, "k": f.k, "u": f.u, "blocks": [list(b) for b in f.blocks]}
                for f in self.forms
            ]
        p = self.profile
        return {
            "input": list(self.input),
            "normalized": list(self.normalized),
            "offset": self.affine.offset,
            "scale": self.affine.scale,
            "size": p.set_size,
            "sumset_size": p.sumset_size,
            "b": p.b_value,
            "regime": p.regime.value,
            "cases": {"bi_ap": bi, "long_interval": li, "k6": k6, "forms": forms},
        }


def find_forms(A: NormalizedSet) -> Optional[tuple[FormWitness, ...]]:
    found = recognize_T(A) + recognize_T_reflected(A) + recognize_S(A)
    return tuple(found) or None


def classify(A: SetLike) -> CaseReport:
    A = as_intset(A)
    if len(A) < 2:
        raise ValueError("classification needs |A| >= 2")
    N, phi = normalize(A)
    profile = doubling_profile(N)
    start, length = longest_interval_in(sumset(N, N))
    return CaseReport(
        input=A,
        normalized=N,
        affine=phi,
        profile=profile,
        bi_ap=is_biap(N),
        long_interval=(start, length) if length >= 2 * len(N) - 1 else None,
        k6=k6_witness(N),
        forms=find_forms(N),
    )


def _pair_sums(A) -> set[int]:
    els = list(A)
    return {x + y for i, x in enumerate(els) for y in els[i:]}


def verify_report(report: CaseReport) -> bool:
    """Re-check every certificate in ``report`` from first principles."""
    N = report.normalized
    k = len(N)
    two = _pair_sums(N)
    if report.affine.apply(N) != report.input:
        return False
    if w := report.bi_ap:
        i0, i1 = w.i0, w.i1
        if set(i0) & set(i1) or set(i0) | set(i1) != set(N) or not sums_disjoint(i0, i1):
            return False
    if li := report.long_interval:
        start, length = li
        if length < 2 * k - 1 or any(x not in two for x in range(start, start + length)):
            return False
    if w := report.k6:
        image = w.as_dict()
        if k != 6 or sorted(image.values()) != list(N) or set(image) != set(K6_POINTS):
            return False
        pts = list(K6_POINTS)
        for a in pts:
            for b in pts:
                for c in pts:
                    for d in pts:
                        same = (a[0] + b[0], a[1] + b[1]) == (c[0] + d[0], c[1] + d[1])
                        if same != (image[a] + image[b] == image[c] + image[d]):
                            return False
    if report.forms:
        n = N.max
        if 2 * k != n + 2:
            return False
        for f in report.forms:
            if f.build(n) != N:
                return False
            if f.family == "S":
                if not 4 <= f.u <= n - 6:
                    return False
                sides = ("right", "left")
            else:
                if not 0 <= f.k <= n // 2 - 2:
                    return False
                sides = ("left",)
            for blk, (lo, hi), side in zip(f.blocks, f.hosts(n), sides):
                if not len(blk) or blk.min < lo or blk.max > hi:
                    return False
                if not is_minimal_block(HostedSet(blk, lo, hi), side):
                    return False
    return True


def delta(A: SetLike, B: SetLike) -> int:
    """1 if some translate ``A + t`` fits inside ``B``, else 0."""
    A, B = as_intset(A), as_intset(B)
    if not len(A) or not len(B):
        raise ValueError("empty set")
    bset = set(B)
    for t in range(B.min - A.min, B.max - A.max + 1):
        if all(a + t in bset for a in A):
            return 1
    return 0


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    hypotheses_met: bool
    conclusion_holds: Optional[bool] = None
    witness: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.hypotheses_met != (self.conclusion_holds is not None):
            raise ValueError("conclusion must be decided exactly when hypotheses hold")

    @property
    def failed(self) -> bool:
        return self.conclusion_holds is False

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "hypotheses_met": self.hypotheses_met,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
        }


def check_theorem(theorem_id: str, A: SetLike, B: Optional[SetLike] = None, *, weakened: bool = False) -> TheoremVerdict:
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    if theorem_id == THM_BG:
        if B is None:
            raise ValueError("thm_bg needs a second set B")
        return _check_bg(as_intset(A), as_intset(B), weakened)
    A = as_intset(A)
    if not len(A):
        raise ValueError("empty set")
    N, _ = normalize(A)
    k, n = len(N), N.max
    two = sumset(N, N)
    s = len(two)
    info: dict[str, Any] = {"set": list(A), "normalized": list(N), "size": k, "sumset_size": s}

    if theorem_id == THM_2K1B:
        if not (k > 2 and s < 3 * k - 3):
            return TheoremVerdict(theorem_id, False, None, info)
        b = s - 2 * k + 1
        info.update(b=b, progression_length=n + 1, bound=k + b)
        return TheoremVerdict(theorem_id, True, n + 1 <= k + b, info)

    if theorem_id == THM_FREIMAN2009:
        if not s < 3 * k - 3:
            return TheoremVerdict(theorem_id, False, None, info)
        start, length = longest_interval_in(two)
        info.update(interval_start=start, interval_length=length, required=2 * k - 1)
        return TheoremVerdict(theorem_id, True, length >= 2 * k - 1, info)

    if not (k >= 2 and s == 3 * k - 3):
        return TheoremVerdict(theorem_id, False, None, info)

    if theorem_id == THM_3K3:
        parts = []
        if is_biap(N) is not None:
            parts.append("bi_ap")
        if n + 1 <= 2 * k - 1:
            parts.append("short_progression")
        if k6_witness(N) is not None:
            parts.append("k6")
        info["parts"] = parts
        return TheoremVerdict(theorem_id, True, bool(parts), info)

    report = classify(A)
    info["cases"] = list(report.cases)
    ok = bool(report.cases) and verify_report(report)
    return TheoremVerdict(theorem_id, True, ok, info)


def _check_bg(A: IntSet, B: IntSet, weakened: bool) -> TheoremVerdict:
    if not len(A) or not len(B):
        raise ValueError("empty set")
    ka, kb = len(A), len(B)
    span_a, span_b = A.span, B.span
    bound = ka + kb - 3
    if weakened and span_b < span_a:
        bound = ka + kb - 2
    dl = delta(A, B)
    ab = sumset(A, B)
    info: dict[str, Any] = {"A": list(A), "B": list(B), "delta": dl, "sumset_size": len(ab)}
    if not (span_b <= span_a <= bound and len(ab) <= ka + 2 * kb - 3 - dl):
        return TheoremVerdict(THM_BG, False, None, info)
    start, length = longest_interval_in(ab)
    info.update(interval_start=start, interval_length=length, required=ka + kb - 1)
    return TheoremVerdict(THM_BG, True, length >= ka + kb - 1, info)
