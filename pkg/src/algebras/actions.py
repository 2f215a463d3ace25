"""
Laws of the Λ-action on an algebra
"""

import random

from ..reporting import CheckRecord, ReportBuilder
from ..semiclosed.initial import initial_lambda_theory
from ..terms import TermGenerator, Var, subst
from .models import Algebra

ACTION_TERM_NODES = 12


def action_laws(
    algebra: Algebra,
    samples: int = 100,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Projection, unit and associativity of the action, and agreement of
    s(a) with app_n(λⁿs, a)"""
    rng = rng or random.Random(0)
    prefix = prefix or f"action.{algebra.name}"
    lam_theory = initial_lambda_theory(algebra.equality)
    generator = TermGenerator(rng, ACTION_TERM_NODES)
    local = ReportBuilder(algebra.equality)

    projection = local.aggregate(f"{prefix}.projection", "pr_i(a1..an) = a_i")
    unit = local.aggregate(f"{prefix}.unit", "id(a) = a")
    associativity = local.aggregate(
        f"{prefix}.associativity",
        "t(s1..sn)(a) = t(s1(a)..sn(a))",
        tolerance=0.05,
    )
    abstraction = local.aggregate(
        f"{prefix}.abstraction", "s(a1..an) = app_n(λⁿs, a1..an)", tolerance=0.05
    )

    for _ in range(samples):
        n = rng.randint(1, max_arity)
        m = rng.randint(0, max_arity)
        args = [algebra.sample(rng) for _ in range(m)]
        outer = [algebra.sample(rng) for _ in range(n)]

        i = rng.randrange(n)
        image = algebra.act(Var(i), outer)
        projection.add(algebra.eq(image, outer[i]), [algebra.describe(image)])
        image = algebra.act(Var(0), outer[:1])
        unit.add(algebra.eq(image, outer[0]), [algebra.describe(image)])

        t = generator.term(n)
        inner = [generator.term(m) for _ in range(n)]
        lhs = algebra.act(subst(t, inner), args)
        rhs = algebra.act(t, [algebra.act(s, args) for s in inner])
        associativity.add(
            algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)]
        )

        s = lam_theory.theory.element(n, generator.term(n))
        hat = lam_theory.abstraction(s).payload
        lhs, rhs = algebra.act(s, outer), algebra.act_via_abstraction(hat, outer)
        abstraction.add(
            algebra.eq(lhs, rhs), [algebra.describe(lhs), algebra.describe(rhs)]
        )
    return local.records
