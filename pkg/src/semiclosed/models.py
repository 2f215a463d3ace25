"""
Semi-closed structure on a theory and the λ-theories built from it
"""

import random
from abc import ABC, abstractmethod
from collections.abc import Sequence
from functools import cached_property

from ..clones.interfaces import Theory
from ..clones.models import CloneArityError, FinMap, TheoryElement, TheoryError
from ..terms.models import Const, EqVerdict
from ..utils.mixins import LoggerMixin


class LambdaTheoryError(TheoryError):
    """Raised when a λ-theory operation cannot be carried out"""


class SemiClosedStructure(ABC):
    """A natural retraction rho: L(n) -> L(n+1) with section lam"""

    @abstractmethod
    def rho(self, a: TheoryElement) -> TheoryElement:
        pass

    @abstractmethod
    def lam(self, s: TheoryElement) -> TheoryElement:
        pass


class LambdaTheory(LoggerMixin):
    """A theory together with a semi-closed structure and its derived operations

    app = rho(id) in L(2), app_n in L(n+1), 𝟙_n = lam^(n+1)(app_n) in L(0).
    """

    def __init__(self, theory: Theory, structure: SemiClosedStructure) -> None:
        self.theory = theory
        self.structure = structure

    def __repr__(self) -> str:
        return f"LambdaTheory({self.theory_id!r})"

    @property
    def theory_id(self) -> str:
        return self.theory.theory_id

    # Clone operations

    def element_eq(self, a: TheoryElement, b: TheoryElement) -> EqVerdict:
        return self.theory.element_eq(a, b)

    def proj(self, n: int, i: int) -> TheoryElement:
        return self.theory.proj(n, i)

    def compose(
        self,
        t: TheoryElement,
        args: Sequence[TheoryElement],
        arity: int | None = None,
    ) -> TheoryElement:
        return self.theory.compose(t, args, arity)

    def rename(self, t: TheoryElement, f: FinMap) -> TheoryElement:
        return self.theory.rename(t, f)

    def weaken(self, t: TheoryElement, m: int) -> TheoryElement:
        return self.theory.weaken(t, m)

    def projections(self, n: int) -> list[TheoryElement]:
        return self.theory.projections(n)

    def sample(self, n: int, rng: random.Random) -> TheoryElement:
        return self.theory.sample(n, rng)

    def describe(self, e: TheoryElement) -> str:
        return self.theory.describe(e)

    # Semi-closed structure

    def rho(self, a: TheoryElement) -> TheoryElement:
        self.theory.check_element(a)
        return self.structure.rho(a)

    def lam(self, s: TheoryElement) -> TheoryElement:
        self.theory.check_element(s)
        if s.arity < 1:
            raise CloneArityError("lam needs an element of arity at least 1")
        return self.structure.lam(s)

    def lam_iter(self, s: TheoryElement, times: int) -> TheoryElement:
        for _ in range(times):
            s = self.lam(s)
        return s

    # Derived operations

    @cached_property
    def app(self) -> TheoryElement:
        return self.rho(self.theory.identity())

    @cached_property
    def one(self) -> TheoryElement:
        return self.lam_iter(self.app, 2)

    def app_n(self, n: int) -> TheoryElement:
        """x_0 x_1 ... x_n as an element of L(n+1)"""
        if n < 0:
            raise CloneArityError("app_n needs n >= 0")
        chain = self.theory.identity()
        for k in range(1, n + 1):
            chain = self.compose(
                self.app,
                [self.weaken(chain, k + 1), self.proj(k + 1, k)],
                k + 1,
            )
        return chain

    def one_n(self, n: int) -> TheoryElement:
        return self.lam_iter(self.app_n(n), n + 1)

    def apply(self, a: TheoryElement, *args: TheoryElement) -> TheoryElement:
        """The concatenation a b1 ... bk, computed with app"""
        result = a
        for b in args:
            self.theory.check_element(b, result.arity)
            result = self.compose(self.app, [result, b], result.arity)
        return result

    def abstraction(self, s: TheoryElement) -> TheoryElement:
        """λⁿ s in L(0)"""
        return self.lam_iter(s, s.arity)

    def interpret_constant(self, constant: Const) -> TheoryElement:
        """The L(0) element a constant of the input syntax stands for"""
        raise LambdaTheoryError(f"{self.theory_id} has no meaning for #{constant.name}")
