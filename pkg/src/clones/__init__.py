"""Abstract clones: the theory interface, finite and syntactic instances, laws"""

from .finite import FiniteEndoTheory, finite_endo_theory
from .interfaces import ConstantPresentation, Theory
from .laws import check_clone_laws
from .models import (
    LAWS,
    CloneArityError,
    FinMap,
    FiniteTheoryLimitError,
    LawInstance,
    LawReport,
    LawTally,
    TheoryElement,
    TheoryError,
    TheoryMismatchError,
)
from .syntactic import (
    FunctionSpaceTheory,
    ParameterIsomorphism,
    TermTheory,
    coproduct_embed,
    extension_theory,
    function_space_theory,
    initial_term_theory,
    parameter_iso,
    parameter_names,
)

__all__ = [
    "CloneArityError",
    "ConstantPresentation",
    "FinMap",
    "FiniteEndoTheory",
    "FiniteTheoryLimitError",
    "FunctionSpaceTheory",
    "LAWS",
    "LawInstance",
    "LawReport",
    "LawTally",
    "ParameterIsomorphism",
    "TermTheory",
    "Theory",
    "TheoryElement",
    "TheoryError",
    "TheoryMismatchError",
    "check_clone_laws",
    "coproduct_embed",
    "extension_theory",
    "finite_endo_theory",
    "function_space_theory",
    "initial_term_theory",
    "parameter_iso",
    "parameter_names",
]
