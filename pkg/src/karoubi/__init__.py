"""The category of retracts of the monoid of closed terms and its CCC structure"""

from .category import (
    KaroubiCategory,
    curry_term,
    eval_term,
    exponential_term,
    fst_term,
    product_term,
    snd_term,
)
from .models import (
    BoundaryMismatchError,
    ExponentialObject,
    HomConditionError,
    Idempotent,
    KaroubiError,
    NotIdempotentError,
    ProductObject,
    RetractMap,
)
from .suite import MAP_SEEDS, base_objects, ccc_law_suite, ccc_roster, sample_map

__all__ = [
    "BoundaryMismatchError",
    "ExponentialObject",
    "HomConditionError",
    "Idempotent",
    "KaroubiCategory",
    "KaroubiError",
    "MAP_SEEDS",
    "NotIdempotentError",
    "ProductObject",
    "RetractMap",
    "base_objects",
    "ccc_law_suite",
    "ccc_roster",
    "curry_term",
    "eval_term",
    "exponential_term",
    "fst_term",
    "product_term",
    "sample_map",
    "snd_term",
]
