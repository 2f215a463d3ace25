"""λ-theories: semi-closed structure, Λ and Λ_A, interpretation and theory maps"""

from .abstraction import AbstractionResult, abstraction_recover
from .initial import (
    SyntacticLambdaTheory,
    SyntacticStructure,
    initial_lambda_theory,
    lambda_extension_theory,
)
from .interpreter import interpret
from .models import LambdaTheory, LambdaTheoryError, SemiClosedStructure
from .obstruction import ObstructionWitness, obstruction_table, semi_closed_obstruction
from .theory_maps import (
    TheoryMap,
    check_theory_map,
    identity_map,
    retagging_map,
)

__all__ = [
    "AbstractionResult",
    "LambdaTheory",
    "LambdaTheoryError",
    "ObstructionWitness",
    "SemiClosedStructure",
    "SyntacticLambdaTheory",
    "SyntacticStructure",
    "TheoryMap",
    "abstraction_recover",
    "check_theory_map",
    "identity_map",
    "initial_lambda_theory",
    "interpret",
    "lambda_extension_theory",
    "obstruction_table",
    "retagging_map",
    "semi_closed_obstruction",
]
