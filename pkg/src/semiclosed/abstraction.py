"""
Recovering an element from its closed abstraction: s = app_n(λⁿs, z1..zn)
"""

from dataclasses import dataclass

from ..clones.models import TheoryElement
from ..terms.models import EqVerdict
from .models import LambdaTheory


@dataclass(frozen=True)
class AbstractionResult:
    """ŝ = λⁿs with the reconstruction and both certifying verdicts"""

    hat: TheoryElement
    reconstruction: TheoryElement
    recovered: EqVerdict
    one_fixed: EqVerdict

    @property
    def passed(self) -> bool:
        return self.recovered.is_equal and self.one_fixed.is_equal


def abstraction_recover(theory: LambdaTheory, s: TheoryElement) -> AbstractionResult:
    n = s.arity
    hat = theory.abstraction(s)
    reconstruction = theory.compose(
        theory.app_n(n),
        [theory.weaken(hat, n), *theory.projections(n)],
        n,
    )
    recovered = theory.element_eq(reconstruction, s)
    one_fixed = theory.element_eq(theory.apply(theory.one_n(n), hat), hat)
    return AbstractionResult(hat, reconstruction, recovered, one_fixed)
