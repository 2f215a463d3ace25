"""
Λ-algebras presented by closed terms over a constant alphabet
"""

import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from ..clones.models import CloneArityError, TheoryElement
from ..terms import (
    App,
    BetaEquality,
    Const,
    EqVerdict,
    Term,
    TermGenerator,
    apply,
    is_closed,
    parse,
    print_term,
    scope_of,
    subst,
)
from ..utils.mixins import CertifyingMixin


class AlgebraError(Exception):
    """Base error for Λ-algebras"""


class MembershipError(AlgebraError):
    """Raised when an element is definitely outside a required retract"""


class PresentationError(AlgebraError):
    """Raised for malformed algebra presentations"""


@dataclass(frozen=True, slots=True)
class AlgebraElement:
    """A closed representative over the algebra's alphabet"""

    algebra_id: str
    representative: Term


class Algebra(CertifyingMixin):
    """A term-presented Λ-algebra: closed terms over named constants up to beta_eq

    The trivial algebra decrees every pair of elements equal.
    """

    def __init__(
        self,
        name: str,
        constants: Mapping[str, Term | None] | None = None,
        equality: BetaEquality | None = None,
        trivial: bool = False,
        max_nodes: int = 25,
    ) -> None:
        self._name = name
        self._constants: dict[str, Term | None] = dict(constants or {})
        self.equality = equality or BetaEquality()
        self.trivial = trivial
        self.max_nodes = max_nodes

    def __repr__(self) -> str:
        return f"Algebra({self._name!r})"

    @property
    def name(self) -> str:
        return self._name

    @property
    def constant_table(self) -> Mapping[str, Term | None]:
        return self._constants

    @property
    def term_presented(self) -> bool:
        return not self.trivial

    @property
    def generators(self) -> list[Const]:
        return [Const(name, self._constants[name]) for name in sorted(self._constants)]

    def with_equality(self, equality: BetaEquality) -> "Algebra":
        return Algebra(self._name, self._constants, equality, self.trivial, self.max_nodes)

    # Elements

    def element(self, representative: Term) -> AlgebraElement:
        if not is_closed(representative):
            raise AlgebraError(
                f"{self._name} elements are closed terms, got scope "
                f"{scope_of(representative)}"
            )
        return AlgebraElement(self._name, representative)

    def parse(self, text: str) -> AlgebraElement:
        return self.element(parse(text, (), self._constants))

    def constant(self, name: str) -> AlgebraElement:
        if name not in self._constants:
            raise AlgebraError(f"#{name} is not a constant of {self._name}")
        return AlgebraElement(self._name, Const(name, self._constants[name]))

    def check(self, a: AlgebraElement) -> None:
        if a.algebra_id != self._name:
            raise AlgebraError(f"element of {a.algebra_id!r} used in {self._name!r}")

    def eq(self, a: AlgebraElement, b: AlgebraElement) -> EqVerdict:
        self.check(a)
        self.check(b)
        if self.trivial:
            return EqVerdict.equal(0)
        return self.equality.eq(a.representative, b.representative)

    def describe(self, a: AlgebraElement) -> str:
        return print_term(a.representative)

    def sample(
        self, rng: random.Random, nodes: int | None = None, normal: bool = False
    ) -> AlgebraElement:
        """A random element; with normal=True its representative is in normal form"""
        generator = TermGenerator(rng, self.max_nodes, self.generators)
        if normal:
            return AlgebraElement(self._name, generator.normal_closed(nodes=nodes))
        return AlgebraElement(self._name, generator.closed(nodes))

    # Action of Λ

    def act(
        self, s: TheoryElement | Term, args: Sequence[AlgebraElement]
    ) -> AlgebraElement:
        """s(a1, ..., an): substitute the representatives into s"""
        term, arity = (s.payload, s.arity) if isinstance(s, TheoryElement) else (s, len(args))
        if arity != len(args) or scope_of(term) > len(args):
            raise CloneArityError(f"arity-{arity} term acting on {len(args)} elements")
        for a in args:
            self.check(a)
        return AlgebraElement(self._name, subst(term, [a.representative for a in args]))

    def act_via_abstraction(
        self, closure: Term, args: Sequence[AlgebraElement]
    ) -> AlgebraElement:
        """app_n(ŝ, a1, ..., an) for a closed abstraction ŝ"""
        for a in args:
            self.check(a)
        return AlgebraElement(
            self._name, apply(closure, *(a.representative for a in args))
        )

    def apply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """The binary operation (a, b) -> ab"""
        self.check(a)
        self.check(b)
        return AlgebraElement(self._name, App(a.representative, b.representative))

    def lift(self, t: Term) -> AlgebraElement:
        """A closed pure term read in this algebra"""
        return self.element(t)
