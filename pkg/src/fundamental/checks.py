"""
Certification of the comparison maps: the triangle, naturality of ε,
η as a map of λ-theories and ε on application
"""

import random

from ..algebras.homomorphisms import AlgebraMap
from ..algebras.models import Algebra, AlgebraElement
from ..algebras.monoid import monoid_of, retract_An
from ..clones.models import TheoryElement
from ..reporting import CheckRecord, ReportBuilder
from ..representation.endo_theory import endo_lambda_theory
from ..representation.function_space import evaluation
from ..representation.functor import u_functor_map
from ..semiclosed.initial import SyntacticLambdaTheory
from ..semiclosed.theory_maps import check_theory_map
from ..terms import ONE, THETA, App, EqVerdict, I, Lam, T, Var
from ..utils.logger import get_logger
from .maps import (
    TheoryIsoWitness,
    eps,
    eps_inverse,
    eta,
    eta_inverse,
    eta_inverse_map,
    eta_map,
    eta_target,
)

logger = get_logger(__name__)


def fixed_point_sample(algebra: Algebra, rng: random.Random) -> AlgebraElement:
    """A global element; half of them carry the non-normal representative 𝟙(λx.c)"""
    c = algebra.sample(rng, normal=True)
    constant = Lam(c.representative)
    if rng.random() < 0.5:
        return algebra.element(App(ONE, constant))
    return algebra.element(constant)


def triangle_check(
    theory: SyntacticLambdaTheory,
    samples: int = 200,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """a -> λx.a -> (λx.a)I = a, and the round trip through U(n) at every arity"""
    rng = rng or random.Random(0)
    prefix = prefix or f"triangle.{theory.theory_id}"
    target = eta_target(theory)
    algebra = target.algebra
    local = ReportBuilder(theory.equality)

    for name, term in (("identity", I), ("fixed_point", App(THETA, I))):
        a = theory.theory.element(0, term)
        back = eps(algebra, eta(theory, a, target), certify=False)
        local.check_eq(f"{prefix}.{name}", "(λx.a)I = a", back.representative, term)

    closed = local.aggregate(f"{prefix}.closed_terms", "ε(η(a)) = a", tolerance=0.05)
    round_trip = local.aggregate(
        f"{prefix}.arity_n", "η⁻¹(η(a)) = a in L(n)", tolerance=0.05
    )
    for _ in range(samples):
        a = theory.theory.element(0, theory.theory.generator(rng).closed())
        back = eps(algebra, eta(theory, a, target, certify=False), certify=False)
        closed.add(
            theory.equality.eq(back.representative, a.payload),
            [algebra.describe(back), theory.describe(a)],
        )
        s = theory.sample(rng.randint(1, max_arity), rng)
        recovered = eta_inverse(theory, eta(theory, s, target, certify=False))
        round_trip.add(
            theory.element_eq(recovered, s),
            [theory.describe(recovered), theory.describe(s)],
        )
    return local.records


def naturality_check(
    f: AlgebraMap,
    samples: int = 100,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """ε_B(U_f(a)) = f(ε_A(a)) on sampled global elements a ∈ U_A(0)"""
    rng = rng or random.Random(0)
    prefix = prefix or f"naturality.{f.name}"
    u_f = u_functor_map(f)
    source_id = u_f.source.theory_id
    local = ReportBuilder(f.target.equality)
    square = local.aggregate(
        f"{prefix}.square", "ε_B(U_f a) = f(ε_A a)", tolerance=0.05
    )
    for _ in range(samples):
        a = fixed_point_sample(f.source, rng)
        image = u_f(TheoryElement(source_id, 0, a.representative))
        lhs = eps(f.target, image, certify=False)
        rhs = f(eps(f.source, a, certify=False))
        square.add(
            f.target.eq(lhs, rhs), [f.target.describe(lhs), f.target.describe(rhs)]
        )
    return local.records


def eta_checks(
    theory: SyntacticLambdaTheory,
    samples: int = 100,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Membership, the value formula, injectivity and the theory-map harness for η"""
    rng = rng or random.Random(0)
    prefix = prefix or f"eta.{theory.theory_id}"
    target = eta_target(theory)
    algebra = target.algebra
    monoid = monoid_of(algebra)
    local = ReportBuilder(theory.equality)

    constant = theory.theory.element(0, T)
    local.check_eq(
        f"{prefix}.arity_zero",
        "η(a) = λx.a",
        eta(theory, constant, target).payload,
        Lam(T),
    )

    app = eta(theory, theory.app, target)
    values = local.aggregate(
        f"{prefix}.app_value", "η(app)(c1, c2) = λx. c1x(c2x)", tolerance=0.05
    )
    membership = local.aggregate(
        f"{prefix}.membership", "𝟙_(n+1) η(a) = η(a)", tolerance=0.05
    )
    injective = local.aggregate(
        f"{prefix}.injective", "a ≠ b ⇒ η(a) ≠ η(b)", tolerance=0.05
    )
    for _ in range(samples):
        c1, c2 = monoid.sample(rng), monoid.sample(rng)
        value = evaluation(algebra, algebra.element(app.payload), [c1, c2])
        expected = algebra.element(
            Lam(App(App(c1.representative, Var(0)), App(c2.representative, Var(0))))
        )
        values.add(
            algebra.eq(value, expected),
            [algebra.describe(value), algebra.describe(expected)],
        )

        n = rng.randint(0, max_arity)
        a = eta(theory, theory.sample(n, rng), target, certify=False)
        member = algebra.element(a.payload)
        membership.add(
            retract_An(algebra, n + 1).contains(member), [algebra.describe(member)]
        )

        left = theory.theory.element(0, theory.theory.generator(rng).normal_closed())
        right = theory.theory.element(0, theory.theory.generator(rng).normal_closed())
        if theory.element_eq(left, right).is_distinct:
            images = target.element_eq(
                eta(theory, left, target, certify=False),
                eta(theory, right, target, certify=False),
            )
            injective.add(_negated(images), [theory.describe(left), theory.describe(right)])

    local.extend(
        check_theory_map(
            eta_map(theory, target),
            samples=samples,
            rng=rng,
            max_arity=max_arity,
            prefix=f"{prefix}.map",
        )
    )
    return local.records


def eps_checks(
    algebra: Algebra,
    samples: int = 100,
    rng: random.Random | None = None,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """ε preserves application, ignores its constant, and inverts c -> λx.c"""
    rng = rng or random.Random(0)
    prefix = prefix or f"eps.{algebra.name}"
    theory = endo_lambda_theory(algebra)
    local = ReportBuilder(algebra.equality)
    application = local.aggregate(
        f"{prefix}.application", "ε(λy. ay(by)) = ε(a)ε(b)", tolerance=0.05
    )
    insensitive = local.aggregate(f"{prefix}.any_constant", "aI = aT", tolerance=0.05)
    inverse = local.aggregate(f"{prefix}.inverse", "ε(λx.c) = c", tolerance=0.05)
    section = local.aggregate(
        f"{prefix}.eta_after_eps", "λx.(aI) = a on global elements", tolerance=0.05
    )
    for _ in range(samples):
        a, b = fixed_point_sample(algebra, rng), fixed_point_sample(algebra, rng)
        product = theory.internal_application(a, b)
        lhs = eps(algebra, product, certify=False)
        rhs = algebra.apply(eps(algebra, a), eps(algebra, b))
        application.add(algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)])

        with_t = algebra.element(App(a.representative, T))
        with_i = eps(algebra, a, certify=False)
        insensitive.add(
            algebra.eq(with_i, with_t),
            [algebra.describe(with_i), algebra.describe(with_t)],
        )

        c = algebra.sample(rng, normal=True)
        back = eps(algebra, eps_inverse(algebra, c), certify=False)
        inverse.add(algebra.eq(back, c), [algebra.describe(back), algebra.describe(c)])

        again = eps_inverse(algebra, with_i)
        section.add(algebra.eq(again, a), [algebra.describe(again), algebra.describe(a)])
    return local.records


def theory_iso_witness(
    theory: SyntacticLambdaTheory,
    samples: int = 100,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> TheoryIsoWitness:
    """η and η⁻¹ with both round trips certified; U(n) is read through its global part λy. dI"""
    rng = rng or random.Random(0)
    prefix = prefix or f"iso.{theory.theory_id}"
    target = eta_target(theory)
    forward, backward = eta_map(theory, target), eta_inverse_map(theory, target)
    local = ReportBuilder(theory.equality)
    there = local.aggregate(f"{prefix}.backward_forward", "η⁻¹(η a) = a", tolerance=0.05)
    back = local.aggregate(
        f"{prefix}.forward_backward", "η(η⁻¹ d) = d on global d", tolerance=0.05
    )
    for _ in range(samples):
        n = rng.randint(0, max_arity)
        a = theory.sample(n, rng)
        recovered = backward(forward(a))
        there.add(
            theory.element_eq(recovered, a),
            [theory.describe(recovered), theory.describe(a)],
        )
        d = target.sample(n, rng)
        global_part = TheoryElement(target.theory_id, n, Lam(App(d.payload, I)))
        rebuilt = forward(backward(global_part))
        back.add(
            target.element_eq(rebuilt, global_part),
            [target.describe(rebuilt), target.describe(global_part)],
        )
    return TheoryIsoWitness(forward, backward, local.records)


def _negated(verdict: EqVerdict) -> EqVerdict:
    if verdict.is_distinct:
        return EqVerdict.equal(verdict.steps)
    if verdict.is_equal:
        return EqVerdict.distinct(verdict.steps)
    return verdict

