"""
The function space A(2) ≅ U^U: equivariant maps, their generators and evaluation
"""

import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from ..algebras.models import Algebra, AlgebraElement
from ..algebras.monoid import monoid_of, retract_An
from ..reporting import CheckRecord, ReportBuilder
from ..terms import ONE, App, Lam, P, Q, Term, Var, after, apply

BinaryProcedure = Callable[[Term, Term], Term]


@dataclass(frozen=True)
class EquivariantMap:
    """φ: M x M -> M given by a generator d ∈ A(2) or, in tests, a bare procedure"""

    algebra: Algebra
    procedure: BinaryProcedure
    generator: Term | None = None

    def __call__(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        self.algebra.check(a)
        self.algebra.check(b)
        return self.algebra.element(self.procedure(a.representative, b.representative))


def _generated(d: Term) -> BinaryProcedure:
    def procedure(a: Term, b: Term) -> Term:
        return Lam(apply(d, App(a, Var(0)), App(b, Var(0))))

    return procedure


def phi_of(algebra: Algebra, d: AlgebraElement, check: bool = True) -> EquivariantMap:
    """φ(a, b) = λy. d(ay)(by)"""
    if check:
        retract_An(algebra, 2).require(d)
    return EquivariantMap(algebra, _generated(d.representative), d.representative)


def d_of(algebra: Algebra, phi: EquivariantMap | BinaryProcedure) -> AlgebraElement:
    """d = λyz. φ(p, q)(λx. xyz)"""
    procedure = phi.procedure if isinstance(phi, EquivariantMap) else phi
    image = procedure(P, Q)
    return algebra.element(Lam(Lam(App(image, Lam(apply(Var(0), Var(2), Var(1)))))))


def evaluation(
    algebra: Algebra,
    d: AlgebraElement,
    args: Sequence[AlgebraElement],
    check: bool = False,
) -> AlgebraElement:
    """(a1..an) -> λy. d y (a1 y) ... (an y) for d ∈ A(n+1)"""
    if check:
        retract_An(algebra, len(args) + 1).require(d)
        for a in args:
            retract_An(algebra, 1).require(a)
    body = apply(d.representative, Var(0), *(App(a.representative, Var(0)) for a in args))
    return algebra.element(Lam(body))


def function_space_checks(
    algebra: Algebra,
    generators: int = 200,
    maps: int = 50,
    pairs: int = 10,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Both round trips, equivariance and the reflexive retract U^U ◁ U"""
    rng = rng or random.Random(0)
    prefix = prefix or f"function_space.{algebra.name}"
    monoid = monoid_of(algebra)
    a2 = retract_An(algebra, 2)
    local = ReportBuilder(algebra.equality)

    generator_trip = local.aggregate(f"{prefix}.round_trip_generator", "d(φ_d) = d")
    equivariance = local.aggregate(
        f"{prefix}.equivariance", "φ(a∘c, b∘c) = φ(a,b)∘c", tolerance=0.05
    )
    reflexive = local.aggregate(
        f"{prefix}.reflexive_retract", "𝟙∘(𝟙∘d) = 𝟙∘d and 𝟙∘d = d on A(2)"
    )
    for _ in range(generators):
        d = a2.sample(rng)
        phi = phi_of(algebra, d, check=False)
        back = d_of(algebra, phi)
        generator_trip.add(
            algebra.eq(back, d), [algebra.describe(back), algebra.describe(d)]
        )
        a, b, c = (monoid.sample(rng) for _ in range(3))
        lhs = phi(monoid.mult(a, c), monoid.mult(b, c))
        rhs = monoid.mult(phi(a, b), c)
        equivariance.add(
            algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)]
        )
        once = algebra.element(after(ONE, d.representative))
        twice = algebra.element(after(ONE, once.representative))
        reflexive.add(algebra.eq(twice, once), [algebra.describe(twice)])
        reflexive.add(algebra.eq(once, d), [algebra.describe(once), algebra.describe(d)])

    map_trip = local.aggregate(
        f"{prefix}.round_trip_map", "φ_{d(φ)}(a,b) = φ(a,b)", tolerance=0.05
    )
    for index in range(maps):
        hidden = a2.sample(rng)
        base = _generated(hidden.representative)
        if index % 2:
            twist = monoid.sample(rng).representative
            procedure: BinaryProcedure = _twisted(base, twist)
        else:
            procedure = base
        rebuilt = phi_of(algebra, d_of(algebra, procedure), check=False)
        for _ in range(pairs):
            a, b = monoid.sample(rng), monoid.sample(rng)
            lhs = rebuilt(a, b)
            rhs = algebra.element(procedure(a.representative, b.representative))
            map_trip.add(
                algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)]
            )
    return local.records


def _twisted(base: BinaryProcedure, twist: Term) -> BinaryProcedure:
    """(a, b) -> twist ∘ φ(a, b), still equivariant"""

    def procedure(a: Term, b: Term) -> Term:
        return after(twist, base(a, b))

    return procedure


def generator_of_evaluation() -> Term:
    """𝟙, whose map is the evaluation (a, b) -> λy. ay(by)

    𝟙₂ generates λy. 𝟙(ay(by)), which agrees with it only where ay(by) is an abstraction.
    """
    return ONE
