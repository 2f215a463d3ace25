"""
The initial λ-theory Λ and its theories of extensions Λ_A
"""

from ..clones.interfaces import ConstantPresentation
from ..clones.models import TheoryElement
from ..clones.syntactic import TermTheory, extension_theory, initial_term_theory
from ..terms import App, BetaEquality, Const, Lam, Var, expand_constants
from ..terms import rename as rename_term
from .models import LambdaTheory, LambdaTheoryError, SemiClosedStructure


class SyntacticStructure(SemiClosedStructure):
    """rho(t) = t x_n and lam(s) = λx_n. s on terms in context"""

    def __init__(self, theory: TermTheory) -> None:
        self.theory = theory

    def rho(self, a: TheoryElement) -> TheoryElement:
        n = a.arity
        return TheoryElement(a.theory_id, n + 1, App(a.payload, Var(n)))

    def lam(self, s: TheoryElement) -> TheoryElement:
        n = s.arity - 1
        images = [*range(1, n + 1), 0]
        return TheoryElement(s.theory_id, n, Lam(rename_term(s.payload, images)))


class SyntacticLambdaTheory(LambdaTheory):
    """A λ-theory whose elements are terms over a constant alphabet"""

    theory: TermTheory

    def __init__(self, theory: TermTheory) -> None:
        super().__init__(theory, SyntacticStructure(theory))

    @property
    def equality(self) -> BetaEquality:
        return self.theory.equality

    def interpret_constant(self, constant: Const) -> TheoryElement:
        if constant.name in self.theory.constants:
            unfolding = self.theory.constants[constant.name]
            return TheoryElement(self.theory_id, 0, Const(constant.name, unfolding))
        if constant.unfolding is not None:
            return TheoryElement(self.theory_id, 0, expand_constants(constant))
        raise LambdaTheoryError(
            f"#{constant.name} is not a constant of {self.theory_id}"
        )


def initial_lambda_theory(equality: BetaEquality | None = None) -> SyntacticLambdaTheory:
    """Λ: terms in context up to beta_eq"""
    return SyntacticLambdaTheory(initial_term_theory(equality))


def lambda_extension_theory(
    algebra: ConstantPresentation,
    equality: BetaEquality | None = None,
) -> SyntacticLambdaTheory:
    """Λ_A: Λ with one constant per generator of A

    Constants are closed, so lam never captures them.
    """
    return SyntacticLambdaTheory(
        extension_theory(initial_term_theory(equality), algebra)
    )
