"""
The endomorphism λ-theory U_A of the reflexive universal U: U_A(n) = A(n+1)
"""

import random
from collections.abc import Sequence
from typing import Any

from ..algebras.models import Algebra, AlgebraElement, MembershipError
from ..algebras.monoid import monoid_of, retract_An
from ..clones.interfaces import Theory
from ..clones.models import TheoryElement, TheoryError
from ..reporting import CheckRecord, ReportBuilder
from ..semiclosed.models import LambdaTheory, SemiClosedStructure
from ..terms import (
    App,
    BetaEquality,
    Const,
    EqVerdict,
    Lam,
    Term,
    Var,
    apply,
    is_closed,
    lams,
    one_n,
    print_term,
)
from .function_space import evaluation

# Representatives are kept small by normalizing with this much fuel.
TIDY_FUEL = 500


class EndoTheory(Theory):
    """Clone of U_A: an n-ary operation is a closed d with 𝟙_(n+1) d = d

    Evaluated at a stage, d sends (a1..an) to λy. d y (a1 y) ... (an y).
    """

    def __init__(self, algebra: Algebra, check_membership: bool = False) -> None:
        super().__init__(f"U[{algebra.name}]")
        self.algebra = algebra
        self.check_membership = check_membership
        self.tidier = algebra.equality.with_fuel(TIDY_FUEL)

    @property
    def equality(self) -> BetaEquality:
        return self.algebra.equality

    def tidy(self, t: Term) -> Term:
        return self.tidier.tidy(t)

    def validate_payload(self, arity: int, payload: Any) -> None:
        if not isinstance(payload, Term) or not is_closed(payload):
            raise TheoryError(f"{self.theory_id} representatives are closed terms")
        if self.check_membership:
            retract_An(self.algebra, arity + 1).require(self.as_algebra(payload))

    def as_algebra(self, payload: Term) -> AlgebraElement:
        return self.algebra.element(payload)

    def element_eq(self, a: TheoryElement, b: TheoryElement) -> EqVerdict:
        self.check_element(a)
        self.check_element(b, a.arity)
        return self.algebra.eq(self.as_algebra(a.payload), self.as_algebra(b.payload))

    def proj(self, n: int, i: int) -> TheoryElement:
        """λy w0 ... w(n-1). wi"""
        self.check_proj_index(n, i)
        return TheoryElement(self.theory_id, n, lams(n + 1, Var(n - 1 - i)))

    def compose(
        self,
        t: TheoryElement,
        args: Sequence[TheoryElement],
        arity: int | None = None,
    ) -> TheoryElement:
        """λy w0 .. w(m-1). d y (e1 y w0 .. w(m-1)) ... (en y w0 .. w(m-1))"""
        m = self.composite_arity(t, args, arity)
        stage = Var(m)
        variables = [Var(m - 1 - j) for j in range(m)]
        body = apply(
            t.payload,
            stage,
            *(apply(arg.payload, stage, *variables) for arg in args),
        )
        return TheoryElement(self.theory_id, m, self.tidy(lams(m + 1, body)))

    def sample(self, n: int, rng: random.Random) -> TheoryElement:
        member = retract_An(self.algebra, n + 1).sample(rng)
        return TheoryElement(self.theory_id, n, self.tidy(member.representative))

    def describe(self, e: TheoryElement) -> str:
        return print_term(e.payload)

    def evaluate(
        self, e: TheoryElement, args: Sequence[AlgebraElement]
    ) -> AlgebraElement:
        """The stage-wise value on members of M_A"""
        self.check_element(e, len(args))
        return evaluation(self.algebra, self.as_algebra(e.payload), args)


class EndoStructure(SemiClosedStructure):
    """rho(d) = 𝟙_(n+2) d; lam is the inclusion A(n+2) ⊆ A(n+1)"""

    def __init__(self, theory: EndoTheory) -> None:
        self.theory = theory

    def rho(self, a: TheoryElement) -> TheoryElement:
        payload = self.theory.tidy(App(one_n(a.arity + 2), a.payload))
        return TheoryElement(a.theory_id, a.arity + 1, payload)

    def lam(self, s: TheoryElement) -> TheoryElement:
        return TheoryElement(s.theory_id, s.arity - 1, s.payload)


class EndoLambdaTheory(LambdaTheory):
    """U_A as a λ-theory"""

    theory: EndoTheory

    def __init__(self, algebra: Algebra, check_membership: bool = False) -> None:
        theory = EndoTheory(algebra, check_membership)
        super().__init__(theory, EndoStructure(theory))

    @property
    def algebra(self) -> Algebra:
        return self.theory.algebra

    @property
    def equality(self) -> BetaEquality:
        return self.theory.equality

    def interpret_constant(self, constant: Const) -> TheoryElement:
        """A constant c of A is the global element λy. c"""
        if constant.unfolding is None and constant.name not in self.algebra.constant_table:
            raise MembershipError(f"#{constant.name} is not a constant of {self.algebra.name}")
        return TheoryElement(self.theory_id, 0, Lam(constant))

    def internal_application(
        self, a: AlgebraElement, b: AlgebraElement
    ) -> AlgebraElement:
        """(a, b) -> λy. ay(by), app evaluated at the stage"""
        return self.theory.evaluate(self.app, [a, b])


def endo_lambda_theory(algebra: Algebra, check_membership: bool = False) -> EndoLambdaTheory:
    if algebra.trivial:
        raise TheoryError("the trivial algebra has no term representatives")
    return EndoLambdaTheory(algebra, check_membership)


def validate_composition(
    theory: EndoLambdaTheory,
    samples: int = 200,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """The compose formula against composing evaluation maps

    evaluation(compose(d, e), a) = evaluation(d, [evaluation(ei, a)])
    """
    rng = rng or random.Random(0)
    prefix = prefix or f"endo.{theory.algebra.name}"
    monoid = monoid_of(theory.algebra)
    local = ReportBuilder(theory.equality)
    oracle = local.aggregate(
        f"{prefix}.compose_oracle",
        "ev(d(e1..en), a) = ev(d, [ev(e1, a)..ev(en, a)])",
        tolerance=0.05,
    )
    for _ in range(samples):
        n, m = rng.randint(0, max_arity), rng.randint(0, max_arity)
        d = theory.sample(n, rng)
        es = [theory.sample(m, rng) for _ in range(n)]
        points = [monoid.sample(rng) for _ in range(m)]
        lhs = theory.theory.evaluate(theory.compose(d, es, m), points)
        rhs = theory.theory.evaluate(
            d, [theory.theory.evaluate(e, points) for e in es]
        )
        oracle.add(
            theory.algebra.eq(lhs, rhs),
            [theory.algebra.describe(lhs), theory.algebra.describe(rhs)],
        )
    return local.records


def retraction_checks(
    theory: EndoLambdaTheory,
    samples: int = 100,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """rho(lam e) = e and lam(s) = 𝟙 lam(s) on sampled members"""
    rng = rng or random.Random(0)
    prefix = prefix or f"endo.{theory.algebra.name}"
    local = ReportBuilder(theory.equality)
    retraction = local.aggregate(
        f"{prefix}.retraction", "rho(lam e) = 𝟙_(n+2) e = e", tolerance=0.05
    )
    characterization = local.aggregate(
        f"{prefix}.lam_fixed", "𝟙 (λⁿ⁺¹ s) = λⁿ⁺¹ s in U(0)", tolerance=0.05
    )
    for _ in range(samples):
        n = rng.randint(0, max_arity)
        e = theory.sample(n + 1, rng)
        back = theory.rho(theory.lam(e))
        retraction.add(
            theory.element_eq(back, e), [theory.describe(back), theory.describe(e)]
        )
        hat = theory.abstraction(theory.sample(n + 1, rng))
        fixed = theory.apply(theory.one, hat)
        characterization.add(
            theory.element_eq(fixed, hat), [theory.describe(fixed), theory.describe(hat)]
        )
    return local.records
