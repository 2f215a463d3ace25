"""
Maps of λ-theories and the harness that certifies them on samples
"""

import random
from collections.abc import Callable
from dataclasses import dataclass

from ..clones.models import TheoryElement
from ..reporting import CheckRecord, ReportBuilder
from ..terms import TermGenerator
from ..utils.logger import get_logger
from .interpreter import interpret
from .models import LambdaTheory

logger = get_logger(__name__)

SYNTAX_NODES = 12


@dataclass(frozen=True)
class TheoryMap:
    """An arity-preserving map of representatives L -> L'"""

    name: str
    source: LambdaTheory
    target: LambdaTheory
    on_element: Callable[[TheoryElement], TheoryElement]

    def __call__(self, e: TheoryElement) -> TheoryElement:
        self.source.theory.check_element(e)
        image = self.on_element(e)
        self.target.theory.check_element(image, e.arity)
        return image

    def then(self, other: "TheoryMap") -> "TheoryMap":
        return TheoryMap(
            f"{other.name}∘{self.name}",
            self.source,
            other.target,
            lambda e: other(self(e)),
        )


def identity_map(theory: LambdaTheory) -> TheoryMap:
    return TheoryMap(f"id_{theory.theory_id}", theory, theory, lambda e: e)


def retagging_map(source: LambdaTheory, target: LambdaTheory) -> TheoryMap:
    """Keep the representative, change the theory; e.g. the unique Λ -> Λ_A"""
    return TheoryMap(
        f"{source.theory_id}->{target.theory_id}",
        source,
        target,
        lambda e: TheoryElement(target.theory_id, e.arity, e.payload),
    )


def check_theory_map(
    f: TheoryMap,
    samples: int = 100,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Certify f as a map of λ-theories

    Checks app and 𝟙 are preserved, then tests the conclusion: f is a clone
    map that commutes with rho and lam and preserves interpretation.
    """
    rng = rng or random.Random(0)
    source, target = f.source, f.target
    prefix = prefix or f"map.{f.name}"
    local = ReportBuilder()

    def record(check_id: str, identity: str, lhs: TheoryElement, rhs: TheoryElement) -> None:
        local.record_verdict(
            f"{prefix}.{check_id}",
            identity,
            target.element_eq(lhs, rhs),
            [target.describe(lhs), target.describe(rhs)],
        )

    record("app", "F(app) = app'", f(source.app), target.app)
    record("one", "F(𝟙) = 𝟙'", f(source.one), target.one)

    projections = local.aggregate(f"{prefix}.proj", "F(pr_i) = pr'_i")
    composition = local.aggregate(
        f"{prefix}.compose", "F(t(a1..an)) = F(t)(F(a1)..F(an))", tolerance=0.05
    )
    rho = local.aggregate(f"{prefix}.rho", "F(rho a) = rho'(F a)", tolerance=0.05)
    lam = local.aggregate(f"{prefix}.lam", "F(lam s) = lam'(F s)", tolerance=0.05)
    semantics = local.aggregate(
        f"{prefix}.interpretation", "F(⟦s⟧) = ⟦s⟧'", tolerance=0.05
    )

    for _ in range(samples):
        n = rng.randint(0, max_arity)
        m = rng.randint(0, max_arity)
        if n:
            i = rng.randrange(n)
            image = f(source.proj(n, i))
            projections.add(target.element_eq(image, target.proj(n, i)))
        t = source.sample(n, rng)
        args = [source.sample(m, rng) for _ in range(n)]
        lhs = f(source.compose(t, args, m))
        rhs = target.compose(f(t), [f(a) for a in args], m)
        composition.add(
            target.element_eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)]
        )

        a = source.sample(n, rng)
        lhs, rhs = f(source.rho(a)), target.rho(f(a))
        rho.add(target.element_eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)])

        s = source.sample(n + 1, rng)
        lhs, rhs = f(source.lam(s)), target.lam(f(s))
        lam.add(target.element_eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)])

        raw = TermGenerator(rng, SYNTAX_NODES).term(n)
        lhs, rhs = f(interpret(raw, n, source)), interpret(raw, n, target)
        semantics.add(
            target.element_eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)]
        )

    records = local.records
    logger.info(
        "Theory map checked",
        map=f.name,
        samples=samples,
        failed=sum(not r.passed for r in records),
    )
    return records

