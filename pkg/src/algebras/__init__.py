"""Λ-algebras: presentations, homomorphisms, the monoid M_A and retracts A(n)"""

from .actions import action_laws
from .homomorphisms import (
    HOM_CONSTANTS,
    AlgebraMap,
    check_hom,
    identity_hom,
    inclusion_hom,
    unique_hom,
)
from .models import (
    Algebra,
    AlgebraElement,
    AlgebraError,
    MembershipError,
    PresentationError,
)
from .monoid import (
    Monoid,
    Retract,
    monoid_iso_check,
    monoid_laws,
    monoid_of,
    retract_An,
    retract_checks,
)
from .presentation import (
    STANDARD_GENERATORS,
    AlgebraPresentation,
    ConstantSpec,
    closed_term_algebra,
    load_presentation,
    open_term_algebra,
    standard_generators,
    trivial_algebra,
)

__all__ = [
    "Algebra",
    "AlgebraElement",
    "AlgebraError",
    "AlgebraMap",
    "AlgebraPresentation",
    "ConstantSpec",
    "HOM_CONSTANTS",
    "MembershipError",
    "Monoid",
    "PresentationError",
    "Retract",
    "STANDARD_GENERATORS",
    "action_laws",
    "check_hom",
    "closed_term_algebra",
    "identity_hom",
    "inclusion_hom",
    "load_presentation",
    "monoid_iso_check",
    "monoid_laws",
    "monoid_of",
    "open_term_algebra",
    "retract_An",
    "retract_checks",
    "standard_generators",
    "trivial_algebra",
    "unique_hom",
]
