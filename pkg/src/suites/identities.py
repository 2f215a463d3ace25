"""
The checklist of displayed identities, each decided by normalization
"""

from ..algebras.presentation import closed_term_algebra
from ..reporting import ReportBuilder
from ..representation.function_space import d_of, generator_of_evaluation, phi_of
from ..representation.products import product_witnesses
from ..semiclosed.initial import initial_lambda_theory
from ..terms import (
    ONE,
    PAIR,
    THETA,
    App,
    BetaEquality,
    F,
    I,
    Lam,
    T,
    Term,
    Var,
    apply,
    context_names,
    shift,
)

# Fixed-point instance is decided within this many steps
FIXED_POINT_FUEL = 50


def sample_body(n: int) -> Term:
    """x_n (λw. w x_0 .. x_(n-1)) in context n + 1"""
    return App(Var(n), Lam(apply(Var(0), *(Var(i + 1) for i in range(n)))))


def core_identities(builder: ReportBuilder, prefix: str = "paper") -> None:
    """Retraction, abstraction, pairing, products, A(2) round trips, evaluation,
    the triangle, ε on application and the fixed point, each as one record
    """
    equality = builder.equality
    theory = initial_lambda_theory(equality)

    # rho(λs) = s and s = app_n(λⁿs, z1..zn)
    for n in range(4):
        s = theory.theory.element(n + 1, sample_body(n))
        back = theory.rho(theory.lam(s))
        builder.check_eq(
            f"{prefix}.retraction_n{n}",
            "(λz.s)z = s",
            back.payload,
            s.payload,
            context_names(n + 1),
        )
        t = theory.theory.element(n, sample_body(n - 1) if n else Lam(Var(0)))
        hat = theory.abstraction(t).payload
        builder.check_eq(
            f"{prefix}.abstraction_n{n}",
            "s = app_n(λⁿs, z1..zn)",
            apply(hat, *(Var(i) for i in range(n))),
            t.payload,
            context_names(n),
        )

    # the pairing retract c -> (cT, cF)
    a, b = Var(0), Var(1)
    builder.check_eq(f"{prefix}.pairing.first", "(λx.xab)T = a", App(apply(PAIR, a, b), T), a, ("a", "b"))
    builder.check_eq(f"{prefix}.pairing.second", "(λx.xab)F = b", App(apply(PAIR, a, b), F), b, ("a", "b"))

    algebra = closed_term_algebra(equality=equality)
    witness = product_witnesses(
        algebra, algebra.element(I), algebra.element(ONE), prefix=f"{prefix}.product"
    )
    builder.extend(witness.records)

    # both round trips through A(2) ≅ U^U
    d = algebra.element(generator_of_evaluation())
    builder.check_eq(
        f"{prefix}.function_space.generator_round_trip",
        "λyz. dyz = d",
        d_of(algebra, phi_of(algebra, d)).representative,
        d.representative,
    )
    phi = phi_of(algebra, d)
    rebuilt = phi_of(algebra, d_of(algebra, phi))
    left, right = algebra.element(I), algebra.element(ONE)
    builder.check_eq(
        f"{prefix}.function_space.map_round_trip",
        "φ_{d(φ)}(a,b) = φ(a,b)",
        rebuilt(left, right).representative,
        phi(left, right).representative,
    )

    # evaluation form, in context (d, a)
    y, d_var, a_var = Var(0), Var(1), Var(2)
    builder.check_eq(
        f"{prefix}.evaluation",
        "λy.d(Iy)(ay) = λy.dy(ay)",
        Lam(apply(d_var, App(I, y), App(a_var, y))),
        Lam(apply(d_var, y, App(a_var, y))),
        ("d", "a"),
    )

    # triangle, in context (a)
    builder.check_eq(f"{prefix}.triangle", "(λx.a)I = a", App(Lam(Var(1)), I), Var(0), ("a",))

    # ε preserves application on global elements λx.c1, λx.c2
    c1, c2 = Lam(Var(1)), Lam(Var(2))
    internal = Lam(apply(shift(c1, 1), Var(0), App(shift(c2, 1), Var(0))))
    builder.check_eq(
        f"{prefix}.eps_application",
        "(λy.ay(by))I = aI(bI)",
        App(internal, I),
        App(App(c1, I), App(c2, I)),
        ("c1", "c2"),
    )

    bounded = ReportBuilder(
        BetaEquality(FIXED_POINT_FUEL, equality.eta, equality.max_size)
    )
    f = Var(0)
    bounded.check_eq(
        f"{prefix}.fixed_point",
        "Θf = f(Θf)",
        App(THETA, f),
        App(f, App(THETA, f)),
        ("f",),
    )
    builder.extend(bounded.records)
