"""
Finite-product witnesses for the extension of Λ-algebra maps to presheaves
"""

import random
from dataclasses import dataclass, field

from ..algebras.homomorphisms import AlgebraMap, identity_hom
from ..algebras.models import Algebra, AlgebraElement
from ..algebras.monoid import monoid_of, retract_An
from ..reporting import CheckRecord, ReportBuilder
from ..terms import TERMINAL, App, EqVerdict, Lam, P, Q, Term, Var, after, apply


def pairing_witness(b1: Term, b2: Term) -> Term:
    """λw. λx. x(b1 w)(b2 w)"""
    return Lam(Lam(apply(Var(0), App(b1, Var(1)), App(b2, Var(1)))))


@dataclass(frozen=True)
class CompetingCone:
    """An object c of A with legs a1, a2 whose images under f satisfy f(ai)∘c = bi"""

    hom: AlgebraMap
    c: AlgebraElement
    a1: AlgebraElement
    a2: AlgebraElement


@dataclass
class ProductWitness:
    s: AlgebraElement
    p: AlgebraElement
    q: AlgebraElement
    records: list[CheckRecord] = field(default_factory=list)
    mediator: AlgebraElement | None = None

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)


def product_witnesses(
    algebra: Algebra,
    b1: AlgebraElement,
    b2: AlgebraElement,
    cone: CompetingCone | None = None,
    prefix: str = "product",
) -> ProductWitness:
    """s = λw(λx. x(b1 w)(b2 w)) with p∘s = b1 and q∘s = b2

    With a competing cone the mediating r = λw(λx. x(a1 w)(a2 w)) is built and
    checked against the legs and against s.
    """
    carrier = retract_An(algebra, 1)
    carrier.require(b1)
    carrier.require(b2)
    local = ReportBuilder(algebra.equality)
    s = algebra.element(pairing_witness(b1.representative, b2.representative))
    p, q = algebra.element(P), algebra.element(Q)

    local.check_eq(f"{prefix}.first", "p∘s = b1", after(P, s.representative), b1.representative)
    local.check_eq(f"{prefix}.second", "q∘s = b2", after(Q, s.representative), b2.representative)
    local.check_eq(
        f"{prefix}.terminal",
        "(λx.I)∘b1 = λx.I",
        after(TERMINAL, b1.representative),
        TERMINAL,
    )

    mediator = None
    if cone is not None:
        source = cone.hom.source
        r = source.element(
            pairing_witness(cone.a1.representative, cone.a2.representative)
        )
        mediator = r
        source_builder = ReportBuilder(source.equality)
        source_builder.check_eq(
            f"{prefix}.mediator_first",
            "p∘r = a1",
            after(P, r.representative),
            cone.a1.representative,
        )
        source_builder.check_eq(
            f"{prefix}.mediator_second",
            "q∘r = a2",
            after(Q, r.representative),
            cone.a2.representative,
        )
        local.extend(source_builder.records)
        local.check_eq(
            f"{prefix}.mediator_factor",
            "f(r)∘c = s",
            after(cone.hom(r).representative, cone.c.representative),
            s.representative,
        )
    return ProductWitness(s, p, q, local.records, mediator)


def product_checks(
    algebra: Algebra,
    samples: int = 50,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """product_witnesses on seeded members, with identity-hom cones"""
    rng = rng or random.Random(0)
    prefix = prefix or f"products.{algebra.name}"
    monoid = monoid_of(algebra)
    hom = identity_hom(algebra)
    local = ReportBuilder(algebra.equality)
    tallies = {
        name: local.aggregate(f"{prefix}.{name}", identity, tolerance=0.05)
        for name, identity in (
            ("first", "p∘s = b1"),
            ("second", "q∘s = b2"),
            ("terminal", "(λx.I)∘b = λx.I"),
            ("mediator_first", "p∘r = a1"),
            ("mediator_second", "q∘r = a2"),
            ("mediator_factor", "f(r)∘c = s"),
        )
    }
    for index in range(samples):
        c, a1, a2 = (monoid.sample(rng) for _ in range(3))
        b1, b2 = monoid.mult(a1, c), monoid.mult(a2, c)
        witness = product_witnesses(
            algebra, b1, b2, CompetingCone(hom, c, a1, a2), prefix=f"sample{index}"
        )
        for record in witness.records:
            name = record.id.split(".", 1)[1]
            tallies[name].add(EqVerdict(record.verdict, record.steps), record.terms)
    return local.records

