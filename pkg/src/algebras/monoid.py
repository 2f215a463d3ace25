"""
The monoid M_A on A(1) and the retracts A(n) = {a | 𝟙_n a = a}
"""

import random
from dataclasses import dataclass

from ..clones.models import TheoryElement
from ..reporting import CheckRecord, ReportBuilder
from ..semiclosed.initial import SyntacticLambdaTheory
from ..terms import ONE, App, EqVerdict, I, after, one_n
from ..utils.logger import get_logger
from .models import Algebra, AlgebraElement, MembershipError
from .presentation import closed_term_algebra

logger = get_logger(__name__)


@dataclass(frozen=True)
class Retract:
    """A(n): membership by 𝟙_n a = a, retraction a -> 𝟙_n a"""

    algebra: Algebra
    n: int

    def retract(self, a: AlgebraElement) -> AlgebraElement:
        self.algebra.check(a)
        return self.algebra.element(App(one_n(self.n), a.representative))

    def contains(self, a: AlgebraElement) -> EqVerdict:
        return self.algebra.eq(self.retract(a), a)

    def contains_composite(self, a: AlgebraElement) -> EqVerdict:
        """The monoid form: a ∈ M_A and 𝟙_(n-1) ∘ a = a"""
        if self.n == 0:
            return EqVerdict.equal(0)
        in_monoid = self.algebra.eq(
            self.algebra.element(App(ONE, a.representative)), a
        )
        if not in_monoid.is_equal:
            return in_monoid
        composite = self.algebra.element(after(one_n(self.n - 1), a.representative))
        verdict = self.algebra.eq(composite, a)
        return EqVerdict(verdict.verdict, verdict.steps + in_monoid.steps)

    def require(self, a: AlgebraElement) -> AlgebraElement:
        """Admit a unless it is definitely outside A(n)"""
        self.algebra.certify(
            self.contains(a),
            MembershipError,
            f"{self.algebra.describe(a)} is not in {self.algebra.name}({self.n})",
            retract=self.n,
        )
        return a

    def sample(self, rng: random.Random) -> AlgebraElement:
        """A member: the retraction of a random element"""
        return self.retract(self.algebra.sample(rng, normal=True))


def retract_An(algebra: Algebra, n: int) -> Retract:
    if n < 0:
        raise ValueError("A(n) needs n >= 0")
    return Retract(algebra, n)


class Monoid:
    """M_A: carrier A(1), unit I, a ∘ b = λx. a(bx)"""

    def __init__(self, algebra: Algebra) -> None:
        self.algebra = algebra
        self.carrier = retract_An(algebra, 1)

    @property
    def unit(self) -> AlgebraElement:
        return self.algebra.element(I)

    def contains(self, a: AlgebraElement) -> EqVerdict:
        return self.carrier.contains(a)

    def mult(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        self.algebra.check(a)
        self.algebra.check(b)
        return self.algebra.element(after(a.representative, b.representative))

    def sample(self, rng: random.Random) -> AlgebraElement:
        return self.carrier.sample(rng)


def monoid_of(algebra: Algebra) -> Monoid:
    return Monoid(algebra)


def monoid_laws(
    monoid: Monoid,
    samples: int = 100,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Unit, associativity and closure of A(1) on sampled members"""
    rng = rng or random.Random(0)
    algebra = monoid.algebra
    prefix = prefix or f"monoid.{algebra.name}"
    local = ReportBuilder()
    unit = local.aggregate(f"{prefix}.unit", "I ∘ a = a = a ∘ I")
    associativity = local.aggregate(
        f"{prefix}.associativity", "(a ∘ b) ∘ c = a ∘ (b ∘ c)", tolerance=0.05
    )
    idempotent = local.aggregate(f"{prefix}.one_idempotent", "𝟙(𝟙a) = 𝟙a")
    closure = local.aggregate(f"{prefix}.closure", "a, b ∈ A(1) => a ∘ b ∈ A(1)")

    for _ in range(samples):
        a, b, c = (monoid.sample(rng) for _ in range(3))
        for lhs in (monoid.mult(monoid.unit, a), monoid.mult(a, monoid.unit)):
            unit.add(algebra.eq(lhs, a), [algebra.describe(lhs), algebra.describe(a)])
        lhs = monoid.mult(monoid.mult(a, b), c)
        rhs = monoid.mult(a, monoid.mult(b, c))
        associativity.add(
            algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)]
        )
        raw = algebra.sample(rng)
        once = monoid.carrier.retract(raw)
        twice = monoid.carrier.retract(once)
        idempotent.add(
            algebra.eq(twice, once), [algebra.describe(twice), algebra.describe(once)]
        )
        product = monoid.mult(a, b)
        closure.add(monoid.contains(product), [algebra.describe(product)])
    return local.records


def retract_checks(
    algebra: Algebra,
    max_n: int = 3,
    samples: int = 50,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Both characterizations of A(n) agree, A(n+1) ⊆ A(n), 𝟙_n is idempotent"""
    rng = rng or random.Random(0)
    prefix = prefix or f"retract.{algebra.name}"
    local = ReportBuilder()
    for n in range(1, max_n + 1):
        retract, smaller = retract_An(algebra, n), retract_An(algebra, n - 1)
        agree = local.aggregate(
            f"{prefix}.A{n}.characterizations",
            f"𝟙_{n} d = d  <=>  𝟙 d = d and 𝟙_{n - 1} ∘ d = d",
        )
        inclusion = local.aggregate(
            f"{prefix}.A{n}.inclusion", f"A({n}) ⊆ A({n - 1})"
        )
        idempotent = local.aggregate(
            f"{prefix}.A{n}.idempotent", f"𝟙_{n}(𝟙_{n} a) = 𝟙_{n} a"
        )
        for _ in range(samples):
            raw = algebra.sample(rng)
            member = retract.retract(raw)
            agree.add(retract.contains_composite(member), [algebra.describe(member)])
            inclusion.add(smaller.contains(member), [algebra.describe(member)])
            twice = retract.retract(member)
            idempotent.add(
                algebra.eq(twice, member),
                [algebra.describe(twice), algebra.describe(member)],
            )
    return local.records


def monoid_iso_check(
    theory: SyntacticLambdaTheory,
    samples: int = 100,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """M_{L(0)} ≅ L(1) through s -> λs and a -> rho(a)"""
    rng = rng or random.Random(0)
    prefix = prefix or f"monoid_iso.{theory.theory_id}"
    algebra = closed_term_algebra(theory)
    monoid = monoid_of(algebra)
    local = ReportBuilder(theory.equality)

    def to_monoid(s: TheoryElement) -> AlgebraElement:
        return algebra.element(theory.lam(s).payload)

    local.check_eq(
        f"{prefix}.unit", "λ(id) = I", theory.lam(theory.theory.identity()).payload, I
    )
    retraction = local.aggregate(f"{prefix}.rho_lam", "rho(λs) = s")
    section = local.aggregate(f"{prefix}.lam_rho", "λ(rho a) = a on A(1)")
    multiplicative = local.aggregate(
        f"{prefix}.multiplicative", "λ(s(t)) = λs ∘ λt", tolerance=0.05
    )
    for _ in range(samples):
        s, t = theory.sample(1, rng), theory.sample(1, rng)
        back = theory.rho(theory.lam(s))
        retraction.add(
            theory.element_eq(back, s), [theory.describe(back), theory.describe(s)]
        )
        a = monoid.sample(rng)
        there = theory.lam(theory.rho(theory.theory.element(0, a.representative)))
        image = algebra.element(there.payload)
        section.add(algebra.eq(image, a), [algebra.describe(image), algebra.describe(a)])
        lhs = to_monoid(theory.compose(s, [t], 1))
        rhs = monoid.mult(to_monoid(s), to_monoid(t))
        multiplicative.add(
            algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)]
        )
    return local.records
