"""
Term-represented theories: Λ-style clones of terms in context, theories of
extensions by constants, function spaces, coproduct embeddings and the
parameter isomorphism
"""

import random
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..terms import (
    BetaEquality,
    Const,
    EqVerdict,
    Term,
    TermGenerator,
    Var,
    context_names,
    parse,
    print_term,
    scope_of,
    subst,
)
from ..terms import rename as rename_term
from ..terms.substitution import abstract_constants
from .interfaces import ConstantPresentation, Theory
from .models import CloneArityError, FinMap, TheoryElement, TheoryError


class TermTheory(Theory):
    """T(n) = terms in context n over a constant alphabet, equality by beta_eq"""

    def __init__(
        self,
        theory_id: str = "lambda",
        constants: Mapping[str, Term | None] | None = None,
        equality: BetaEquality | None = None,
        max_nodes: int = 25,
    ) -> None:
        super().__init__(theory_id)
        self.constants: dict[str, Term | None] = dict(constants or {})
        self.equality = equality or BetaEquality()
        self.max_nodes = max_nodes

    @property
    def constant_terms(self) -> list[Const]:
        return [Const(name, self.constants[name]) for name in sorted(self.constants)]

    def validate_payload(self, arity: int, payload: Any) -> None:
        if not isinstance(payload, Term):
            raise TheoryError(f"{self.theory_id} elements are terms, got {payload!r}")
        if scope_of(payload) > arity:
            raise CloneArityError(
                f"term needs context {scope_of(payload)}, declared arity {arity}"
            )

    def term(self, arity: int, t: Term) -> TheoryElement:
        return self.element(arity, t)

    def parse(self, text: str, context: Sequence[str] | None = None) -> TheoryElement:
        names = list(context or ())
        return self.element(len(names), parse(text, names, self.constants))

    def element_eq(self, a: TheoryElement, b: TheoryElement) -> EqVerdict:
        self.check_element(a)
        self.check_element(b, a.arity)
        return self.equality.eq(a.payload, b.payload)

    def proj(self, n: int, i: int) -> TheoryElement:
        self.check_proj_index(n, i)
        return TheoryElement(self.theory_id, n, Var(i))

    def compose(
        self,
        t: TheoryElement,
        args: Sequence[TheoryElement],
        arity: int | None = None,
    ) -> TheoryElement:
        m = self.composite_arity(t, args, arity)
        payload = subst(t.payload, [arg.payload for arg in args], t.arity)
        return TheoryElement(self.theory_id, m, payload)

    def rename(self, t: TheoryElement, f: FinMap) -> TheoryElement:
        self.check_element(t, f.source)
        return TheoryElement(self.theory_id, f.target, rename_term(t.payload, f.images))

    def generator(self, rng: random.Random) -> TermGenerator:
        return TermGenerator(rng, self.max_nodes, self.constant_terms)

    def sample(self, n: int, rng: random.Random) -> TheoryElement:
        return TheoryElement(self.theory_id, n, self.generator(rng).term(n))

    def describe(self, e: TheoryElement) -> str:
        return print_term(e.payload, context_names(e.arity))


def initial_term_theory(equality: BetaEquality | None = None) -> TermTheory:
    """Λ as a bare clone: pure terms in context"""
    return TermTheory("lambda", equality=equality)


def extension_theory(base: TermTheory, algebra: ConstantPresentation) -> TermTheory:
    """S_A: the alphabet of S extended by the constants presenting A

    Constants keep their unfoldings, so equality compares after unfolding and
    S_A(0) is A up to the presentation.
    """
    if not algebra.term_presented:
        raise TheoryError(f"algebra {algebra.name!r} is not term-presented")
    merged = dict(base.constants)
    for name, unfolding in algebra.constant_table.items():
        if name in merged and merged[name] != unfolding:
            raise TheoryError(f"constant #{name} already means something else")
        merged[name] = unfolding
    return TermTheory(
        f"{base.theory_id}[{algebra.name}]",
        merged,
        base.equality,
        base.max_nodes,
    )


def coproduct_embed(
    theory: Theory, n: int, m: int
) -> tuple[Callable[[TheoryElement], TheoryElement], Callable[[TheoryElement], TheoryElement]]:
    """The two block embeddings T(n) -> T(n+m) <- T(m)"""
    left_map = FinMap.inclusion(n, n + m)
    right_map = FinMap.inclusion(m, n + m, offset=n)

    def left(e: TheoryElement) -> TheoryElement:
        return theory.rename(e, left_map)

    def right(e: TheoryElement) -> TheoryElement:
        return theory.rename(e, right_map)

    return left, right


class FunctionSpaceTheory(Theory):
    """(T^p => T)(m) = T(m+p): the last p slots are parameters no substitution touches"""

    def __init__(self, base: Theory, p: int) -> None:
        if p < 0:
            raise CloneArityError("parameter count must be non-negative")
        super().__init__(f"{base.theory_id}^{p}")
        self.base = base
        self.p = p

    @property
    def is_finite(self) -> bool:
        return self.base.is_finite

    def lower(self, e: TheoryElement) -> TheoryElement:
        """The underlying element of T(m+p)"""
        self.check_element(e)
        return TheoryElement(self.base.theory_id, e.arity + self.p, e.payload)

    def lift(self, e: TheoryElement) -> TheoryElement:
        self.base.check_element(e)
        m = e.arity - self.p
        if m < 0:
            raise CloneArityError(f"arity {e.arity} has no room for {self.p} parameters")
        return TheoryElement(self.theory_id, m, e.payload)

    def validate_payload(self, arity: int, payload: Any) -> None:
        self.base.validate_payload(arity + self.p, payload)

    def parameter(self, m: int, j: int) -> TheoryElement:
        """The j-th parameter as an element of arity m"""
        self.check_proj_index(self.p, j)
        return self.lift(self.base.proj(m + self.p, m + j))

    def element_eq(self, a: TheoryElement, b: TheoryElement) -> EqVerdict:
        self.check_element(b, a.arity)
        return self.base.element_eq(self.lower(a), self.lower(b))

    def proj(self, n: int, i: int) -> TheoryElement:
        self.check_proj_index(n, i)
        return self.lift(self.base.proj(n + self.p, i))

    def compose(
        self,
        t: TheoryElement,
        args: Sequence[TheoryElement],
        arity: int | None = None,
    ) -> TheoryElement:
        m = self.composite_arity(t, args, arity)
        lowered = [self.lower(arg) for arg in args]
        lowered.extend(self.base.proj(m + self.p, m + j) for j in range(self.p))
        return self.lift(self.base.compose(self.lower(t), lowered, m + self.p))

    def rename(self, t: TheoryElement, f: FinMap) -> TheoryElement:
        self.check_element(t, f.source)
        shifted = FinMap(
            f.source + self.p,
            f.target + self.p,
            f.images + tuple(f.target + j for j in range(self.p)),
        )
        return self.lift(self.base.rename(self.lower(t), shifted))

    def enumerate(self, n: int) -> Iterator[TheoryElement]:
        for e in self.base.enumerate(n + self.p):
            yield self.lift(e)

    def sample(self, n: int, rng: random.Random) -> TheoryElement:
        return self.lift(self.base.sample(n + self.p, rng))

    def describe(self, e: TheoryElement) -> str:
        return f"{self.base.describe(self.lower(e))} with {self.p} parameters"


def function_space_theory(base: Theory, p: int) -> FunctionSpaceTheory:
    return FunctionSpaceTheory(base, p)


def parameter_names(p: int, prefix: str = "v") -> tuple[str, ...]:
    return tuple(f"{prefix}{j}" for j in range(p))


@dataclass
class ParameterIsomorphism:
    """S_{S(p)}(n) ≅ S(n+p): inert parameter constants become the last p slots"""

    base: TermTheory
    p: int
    names: tuple[str, ...] = ()
    extension: TermTheory = field(init=False)

    def __post_init__(self) -> None:
        if self.p < 0:
            raise CloneArityError("parameter count must be non-negative")
        if not self.names:
            self.names = parameter_names(self.p)
        if len(self.names) != self.p:
            raise CloneArityError(f"{self.p} parameters need {self.p} names")
        constants = dict(self.base.constants)
        constants.update({name: None for name in self.names})
        self.extension = TermTheory(
            f"{self.base.theory_id}[{self.base.theory_id}({self.p})]",
            constants,
            self.base.equality,
            self.base.max_nodes,
        )

    def forward(self, e: TheoryElement) -> TheoryElement:
        self.extension.check_element(e)
        payload = abstract_constants(e.payload, self.names, e.arity)
        return self.base.element(e.arity + self.p, payload)

    def backward(self, e: TheoryElement) -> TheoryElement:
        self.base.check_element(e)
        n = e.arity - self.p
        if n < 0:
            raise CloneArityError(f"arity {e.arity} has no room for {self.p} parameters")
        images: list[Term] = [Var(i) for i in range(n)]
        images.extend(Const(name) for name in self.names)
        return self.extension.element(n, subst(e.payload, images, e.arity))

    def compose_commutes(
        self, t: TheoryElement, args: Sequence[TheoryElement], arity: int | None = None
    ) -> EqVerdict:
        """forward(compose(t, a)) against compose(forward t, forward a + parameters)"""
        m = self.extension.composite_arity(t, args, arity)
        lhs = self.forward(self.extension.compose(t, args, m))
        parameters = [self.base.proj(m + self.p, m + j) for j in range(self.p)]
        rhs = self.base.compose(
            self.forward(t),
            [self.forward(arg) for arg in args] + parameters,
            m + self.p,
        )
        return self.base.element_eq(lhs, rhs)


def parameter_iso(base: TermTheory, p: int) -> ParameterIsomorphism:
    return ParameterIsomorphism(base, p)
