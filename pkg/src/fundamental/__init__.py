"""The comparison maps between λ-theories and Λ-algebras and their certification"""

from .checks import (
    eps_checks,
    eta_checks,
    fixed_point_sample,
    naturality_check,
    theory_iso_witness,
    triangle_check,
)
from .maps import (
    TheoryIsoWitness,
    eps,
    eps_inverse,
    eta,
    eta_inverse,
    eta_inverse_map,
    eta_map,
    eta_target,
    global_element,
    require_fixed_point,
)

__all__ = [
    "TheoryIsoWitness",
    "eps",
    "eps_checks",
    "eps_inverse",
    "eta",
    "eta_checks",
    "eta_inverse",
    "eta_inverse_map",
    "eta_map",
    "eta_target",
    "fixed_point_sample",
    "global_element",
    "naturality_check",
    "require_fixed_point",
    "theory_iso_witness",
    "triangle_check",
]
