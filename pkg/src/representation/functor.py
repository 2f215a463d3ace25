"""
U_f: the λ-theory map U_A -> U_B induced by an algebra homomorphism f
"""

import random

from ..algebras.homomorphisms import AlgebraMap, check_hom, identity_hom
from ..algebras.models import AlgebraError
from ..clones.models import TheoryElement
from ..reporting import CheckRecord, ReportBuilder
from ..semiclosed.theory_maps import TheoryMap
from ..terms import Verdict
from ..utils.logger import get_logger
from .endo_theory import EndoLambdaTheory, endo_lambda_theory

logger = get_logger(__name__)


def u_functor_map(
    f: AlgebraMap,
    source: EndoLambdaTheory | None = None,
    target: EndoLambdaTheory | None = None,
    verify: int = 0,
    rng: random.Random | None = None,
) -> TheoryMap:
    """d ∈ A(n+1) goes to f(d) ∈ B(n+1)

    With verify > 0 the homomorphism is checked first on that many samples and
    a definite failure raises AlgebraError.
    """
    if verify:
        failures = [
            record
            for record in check_hom(f, samples=verify, rng=rng)
            if record.verdict is Verdict.DISTINCT
        ]
        if failures:
            raise AlgebraError(
                f"{f.name} is not a homomorphism: "
                + ", ".join(record.id for record in failures)
            )
    source = source or endo_lambda_theory(f.source)
    target = target or endo_lambda_theory(f.target)
    target_id = target.theory_id

    def on_element(e: TheoryElement) -> TheoryElement:
        return TheoryElement(target_id, e.arity, f.map_term(e.payload))

    logger.debug("Induced theory map", hom=f.name, source=source.theory_id, target=target_id)
    return TheoryMap(f"U({f.name})", source, target, on_element)


def functoriality_checks(
    f: AlgebraMap,
    g: AlgebraMap,
    samples: int = 50,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """U(g∘f) = U(g)∘U(f) and U(id) = id on sampled elements of U_A"""
    rng = rng or random.Random(0)
    prefix = prefix or f"functor.{g.name}∘{f.name}"
    a_theory = endo_lambda_theory(f.source)
    b_theory = endo_lambda_theory(f.target)
    c_theory = endo_lambda_theory(g.target)
    uf = u_functor_map(f, a_theory, b_theory)
    ug = u_functor_map(g, b_theory, c_theory)
    ugf = u_functor_map(f.then(g), a_theory, c_theory)
    uid = u_functor_map(identity_hom(f.source), a_theory, a_theory)

    local = ReportBuilder(c_theory.equality)
    composite = local.aggregate(
        f"{prefix}.composite", "U(g∘f)(d) = U(g)(U(f)(d))", tolerance=0.05
    )
    identity = local.aggregate(f"{prefix}.identity", "U(id)(d) = d")
    for _ in range(samples):
        d = a_theory.sample(rng.randint(0, max_arity), rng)
        lhs, rhs = ugf(d), uf.then(ug)(d)
        composite.add(
            c_theory.element_eq(lhs, rhs),
            [c_theory.describe(lhs), c_theory.describe(rhs)],
        )
        same = uid(d)
        identity.add(a_theory.element_eq(same, d), [a_theory.describe(same)])
    return local.records
