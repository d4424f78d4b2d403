"""Structure of finite integer sets with ``|2A| = 3|A| - 3``.

Sumset kernels, the density/minimality predicates, Freiman-isomorphism
search, bi-arithmetic progressions, a certificate-producing classifier and an
exhaustive verification harness.
"""

from .biap import BiAPWitness, biap_decompositions, is_biap
from .classify import (
    THEOREM_IDS,
    CaseReport,
    TheoremVerdict,
    check_theorem,
    classify,
    delta,
    verify_report,
)
from .forms import FormWitness, generate_forms, recognize_S, recognize_T, recognize_T_reflected
from .intset import (
    AffineMap,
    DoublingProfile,
    IntSet,
    NormalizedSet,
    Regime,
    affine_image,
    count,
    doubling_profile,
    longest_interval_in,
    normalize,
    parse_set,
    sumset,
    sumset_frontiers,
)
from .iso import IsoWitness, K6Witness, SumPartition, find_isomorphism, k6_witness, sum_partition
from .kernels import BACKEND
from .predicates import (
    Frontiers,
    HoleTaxonomy,
    HostedSet,
    balanced_holes,
    gaps,
    hole_taxonomy,
    is_additively_minimal,
    is_anti_symmetric,
    is_dense,
    is_half_dense,
    stability_frontiers,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap", "BACKEND", "BiAPWitness", "CaseReport", "DoublingProfile", "FormWitness",
    "Frontiers", "HoleTaxonomy", "HostedSet", "IntSet", "IsoWitness", "K6Witness",
    "NormalizedSet", "Regime", "SumPartition", "THEOREM_IDS", "TheoremVerdict",
    "affine_image", "balanced_holes", "biap_decompositions", "check_theorem", "classify",
    "count", "delta", "doubling_profile", "find_isomorphism", "gaps", "generate_forms",
    "hole_taxonomy", "is_additively_minimal", "is_anti_symmetric", "is_biap", "is_dense",
    "is_half_dense", "k6_witness", "longest_interval_in", "normalize", "parse_set",
    "recognize_S", "recognize_T", "recognize_T_reflected", "stability_frontiers",
    "sum_partition", "sumset", "sumset_frontiers", "verify_report",
]
