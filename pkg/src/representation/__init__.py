"""Presheaf representation: A(2) ≅ U^U, products, and the λ-theory U_A"""

from .endo_theory import (
    EndoLambdaTheory,
    EndoStructure,
    EndoTheory,
    endo_lambda_theory,
    retraction_checks,
    validate_composition,
)
from .function_space import (
    EquivariantMap,
    d_of,
    evaluation,
    function_space_checks,
    generator_of_evaluation,
    phi_of,
)
from .functor import functoriality_checks, u_functor_map
from .products import (
    CompetingCone,
    ProductWitness,
    pairing_witness,
    product_checks,
    product_witnesses,
)

__all__ = [
    "CompetingCone",
    "EndoLambdaTheory",
    "EndoStructure",
    "EndoTheory",
    "EquivariantMap",
    "ProductWitness",
    "d_of",
    "endo_lambda_theory",
    "evaluation",
    "function_space_checks",
    "functoriality_checks",
    "generator_of_evaluation",
    "pairing_witness",
    "phi_of",
    "product_checks",
    "product_witnesses",
    "retraction_checks",
    "u_functor_map",
    "validate_composition",
]
