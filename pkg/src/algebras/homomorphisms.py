"""
Maps of Λ-algebras and the app-plus-constants homomorphism check
"""

import random
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from ..reporting import CheckRecord, ReportBuilder
from ..terms import (
    ONE,
    PAIR,
    F,
    I,
    P,
    Q,
    T,
    Term,
    TermGenerator,
    one_n,
    substitute_constants,
)
from ..utils.logger import get_logger
from .models import Algebra, AlgebraElement, AlgebraError

logger = get_logger(__name__)

# λ-definable constants checked by check_hom; fixed-point combinators are left out.
HOM_CONSTANTS: tuple[tuple[str, Term], ...] = (
    ("I", I),
    ("T", T),
    ("F", F),
    ("one", ONE),
    ("one_2", one_n(2)),
    ("p", P),
    ("q", Q),
    ("pair", PAIR),
)


@dataclass(frozen=True)
class AlgebraMap:
    """Sends each constant of the source to a target representative

    transform post-processes images; it exists to build deliberately broken maps.
    """

    name: str
    source: Algebra
    target: Algebra
    images: Mapping[str, Term] = field(default_factory=dict)
    transform: Callable[[Term], Term] | None = None

    def __post_init__(self) -> None:
        unknown = set(self.images) - set(self.source.constant_table)
        if unknown:
            raise AlgebraError(f"images given for unknown constants {sorted(unknown)}")

    def map_term(self, t: Term) -> Term:
        image = substitute_constants(t, dict(self.images))
        return self.transform(image) if self.transform else image

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        self.source.check(a)
        return self.target.element(self.map_term(a.representative))

    def then(self, other: "AlgebraMap") -> "AlgebraMap":
        """Diagrammatic composite: first self, then other"""

        def composite(t: Term) -> Term:
            return other.map_term(self.map_term(t))

        return AlgebraMap(
            f"{other.name}∘{self.name}",
            self.source,
            other.target,
            {},
            composite,
        )


def identity_hom(algebra: Algebra) -> AlgebraMap:
    return AlgebraMap(f"id_{algebra.name}", algebra, algebra)


def unique_hom(source: Algebra, target: Algebra) -> AlgebraMap:
    """The map out of Λ(0): every generator goes to its own unfolding"""
    images: dict[str, Term] = {}
    for name, unfolding in source.constant_table.items():
        if unfolding is None:
            raise AlgebraError(f"#{name} has no unfolding; {source.name} is not initial")
        images[name] = unfolding
    return AlgebraMap(f"!_{target.name}", source, target, images)


def inclusion_hom(source: Algebra, target: Algebra) -> AlgebraMap:
    """Keep every representative; needs the source alphabet inside the target's"""
    missing = set(source.constant_table) - set(target.constant_table)
    if missing:
        raise AlgebraError(f"{target.name} lacks constants {sorted(missing)}")
    return AlgebraMap(f"{source.name}->{target.name}", source, target)


def check_hom(
    f: AlgebraMap,
    samples: int = 100,
    rng: random.Random | None = None,
    max_arity: int = 2,
    prefix: str | None = None,
) -> list[CheckRecord]:
    """Check f preserves application and the λ-definable constants

    Full action preservation is then tested on the same samples, together with
    the implication from the first two checks to the third.
    """
    rng = rng or random.Random(0)
    source, target = f.source, f.target
    prefix = prefix or f"hom.{f.name}"
    local = ReportBuilder()

    application = local.aggregate(f"{prefix}.app", "f(ab) = f(a)f(b)")
    for _ in range(samples):
        a, b = source.sample(rng), source.sample(rng)
        lhs, rhs = f(source.apply(a, b)), target.apply(f(a), f(b))
        application.add(target.eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)])

    constants = local.aggregate(f"{prefix}.constants", "f(⟦c⟧_A) = ⟦c⟧_B")
    if f.transform is None:
        # substitution fixes constant-free terms
        constants.note = (
            "constant substitution; combinators are constant-free, "
            "holds by construction"
        )
    for _, term in HOM_CONSTANTS:
        lhs, rhs = f(source.lift(term)), target.lift(term)
        constants.add(target.eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)])

    action = local.aggregate(
        f"{prefix}.action", "f(s(a1..an)) = s(f(a1)..f(an))", tolerance=0.05
    )
    generator = TermGenerator(rng, 12)
    for _ in range(samples):
        n = rng.randint(0, max_arity)
        s = generator.term(n)
        args = [source.sample(rng) for _ in range(n)]
        lhs = f(source.act(s, args))
        rhs = target.act(s, [f(a) for a in args])
        action.add(target.eq(lhs, rhs), [target.describe(lhs), target.describe(rhs)])

    premises = application.distinct == 0 and constants.distinct == 0
    local.record(
        f"{prefix}.sufficiency",
        "app and constants preserved => action preserved",
        not premises or action.distinct == 0,
        detail=(
            f"constants checked: {', '.join(name for name, _ in HOM_CONSTANTS)}; "
            f"premises {'hold' if premises else 'fail'}"
        ),
    )
    records = local.records
    logger.info(
        "Homomorphism checked",
        map=f.name,
        samples=samples,
        failed=sum(not r.passed for r in records),
    )
    return records

