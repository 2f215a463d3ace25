"""
The roster of idempotents and the cartesian closed law suite over it
"""

import random

from ..algebras.models import Algebra
from ..algebras.monoid import retract_An
from ..algebras.presentation import closed_term_algebra
from ..reporting import Aggregate, CheckRecord, ReportBuilder
from ..terms import (
    ONE,
    PAIR,
    TERMINAL,
    App,
    B,
    F,
    I,
    Lam,
    P,
    Q,
    T,
    Term,
    Var,
    after,
    apply,
    one_n,
    print_term,
)
from ..utils.logger import get_logger
from .category import KaroubiCategory
from .models import ExponentialObject, Idempotent, ProductObject, RetractMap

logger = get_logger(__name__)

# Raw maps u, used as f∘u∘e; none of them applies a variable to itself.
MAP_SEEDS: tuple[Term, ...] = (
    I,
    T,
    F,
    P,
    Q,
    ONE,
    one_n(2),
    PAIR,
    B,
    TERMINAL,
    Lam(App(Var(0), I)),
    Lam(apply(Var(0), T, F)),
)


def base_objects(category: KaroubiCategory) -> list[Idempotent]:
    return [
        category.idempotent(I, "I"),
        category.idempotent(ONE, "𝟙"),
        category.idempotent(one_n(2), "𝟙₂"),
        category.idempotent(one_n(3), "𝟙₃"),
        category.terminal(),
    ]


def ccc_roster(category: KaroubiCategory, depth: int = 2) -> list[Idempotent]:
    """Base idempotents, then products and exponentials up to the given depth"""
    roster = base_objects(category)
    if depth < 1:
        return roster
    identity, one, one_2, _, terminal = roster
    for e, f in ((one, one), (one, one_2), (one_2, one), (identity, terminal)):
        roster.append(category.product_object(e, f).object)
        roster.append(category.exponential_object(e, f).object)
    if depth >= 2:
        one_one = category.product_object(one, one).object
        arrow = category.exponential_object(one, one).object
        roster.append(category.product_object(one_one, one).object)
        roster.append(category.exponential_object(one, one_one).object)
        roster.append(category.exponential_object(arrow, one).object)
        roster.append(category.product_object(arrow, terminal).object)
    return roster


def sample_map(
    category: KaroubiCategory,
    source: Idempotent,
    target: Idempotent,
    rng: random.Random,
) -> RetractMap:
    return category.restrict(source, target, rng.choice(MAP_SEEDS))


class _LawTallies:
    """One aggregate per law, shared by every object it is checked on"""

    def __init__(self, builder: ReportBuilder, prefix: str) -> None:
        self.builder = builder
        self.prefix = prefix
        self.tallies: dict[str, Aggregate] = {}

    def check(self, law: str, identity: str, lhs: Term, rhs: Term) -> None:
        key = f"{self.prefix}.{law}"
        if key not in self.tallies:
            self.tallies[key] = self.builder.aggregate(key, identity, tolerance=0.05)
        self.tallies[key].add(
            self.builder.equality.eq(lhs, rhs), [print_term(lhs), print_term(rhs)]
        )


def ccc_law_suite(
    category: KaroubiCategory | None = None,
    samples: int = 4,
    rng: random.Random | None = None,
    depth: int = 2,
    prefix: str = "karoubi",
    algebra: Algebra | None = None,
) -> list[CheckRecord]:
    """Category, product, exponential and terminal laws over the roster

    Uniqueness clauses are conditional equations on sampled candidates.
    """
    category = category or KaroubiCategory()
    rng = rng or random.Random(0)
    local = ReportBuilder(category.equality)
    laws = _LawTallies(local, prefix)
    roster = ccc_roster(category, depth)
    base = roster[:5]

    for e in roster:
        laws.check("idempotent", "e∘e = e", after(e.term, e.term), e.term)

    for _ in range(samples):
        _category_laws(category, laws, roster, rng)

    pairs = [(e, f) for e in base for f in base] + [(e, base[1]) for e in roster[5:]]
    rounds = max(1, samples // 2)
    for e, f in pairs:
        product = category.product_object(e, f)
        for _ in range(rounds):
            _product_laws(category, laws, product, rng.choice(base), rng)
    for e, f in pairs:
        exponential = category.exponential_object(e, f)
        for _ in range(rounds):
            _exponential_laws(category, laws, exponential, rng.choice(base), rng)

    _single_identities(category, local, base, algebra, rng, samples, prefix)
    records = local.records
    logger.info(
        "Karoubi laws checked",
        objects=len(roster),
        records=len(records),
        failed=sum(not r.passed for r in records),
    )
    return records


def _category_laws(
    category: KaroubiCategory,
    laws: _LawTallies,
    roster: list[Idempotent],
    rng: random.Random,
) -> None:
    e, f, g, h = (rng.choice(roster) for _ in range(4))
    v = sample_map(category, e, f, rng)
    w = sample_map(category, f, g, rng)
    x = sample_map(category, g, h, rng)
    compose = category.compose_maps

    laws.check("identity_left", "id_f∘v = v", compose(category.identity(f), v).v, v.v)
    laws.check("identity_right", "v∘id_e = v", compose(v, category.identity(e)).v, v.v)
    laws.check(
        "associativity",
        "x∘(w∘v) = (x∘w)∘v",
        compose(x, compose(w, v)).v,
        compose(compose(x, w), v).v,
    )
    composite = compose(w, v)
    laws.check(
        "hom_condition",
        "g∘(w∘v)∘e = w∘v",
        after(g.term, after(composite.v, e.term)),
        composite.v,
    )
    terminal = category.terminal()
    laws.check(
        "terminal_unique",
        "every v: e -> ⊤ is λx.I",
        sample_map(category, e, terminal, rng).v,
        category.to_terminal(e).v,
    )


def _product_laws(
    category: KaroubiCategory,
    laws: _LawTallies,
    product: ProductObject,
    g: Idempotent,
    rng: random.Random,
) -> None:
    compose = category.compose_maps
    a = sample_map(category, g, product.left, rng)
    b = sample_map(category, g, product.right, rng)
    paired = product.pair(a, b)
    laws.check("product_fst", "fst∘⟨a,b⟩ = a", compose(product.fst, paired).v, a.v)
    laws.check("product_snd", "snd∘⟨a,b⟩ = b", compose(product.snd, paired).v, b.v)

    h = sample_map(category, g, product.object, rng)
    rebuilt = product.pair(compose(product.fst, h), compose(product.snd, h))
    laws.check("product_unique", "⟨fst∘h, snd∘h⟩ = h", rebuilt.v, h.v)

    c = App(product.object.term, rng.choice(MAP_SEEDS))
    laws.check(
        "surjective_pairing",
        "pair(fst c)(snd c) = c on fixed points c",
        apply(PAIR, App(product.fst.v, c), App(product.snd.v, c)),
        App(product.object.term, c),
    )


def _exponential_laws(
    category: KaroubiCategory,
    laws: _LawTallies,
    exponential: ExponentialObject,
    g: Idempotent,
    rng: random.Random,
) -> None:
    e = exponential.source
    source = category.product_object(g, e)

    def uncurry(w: RetractMap) -> RetractMap:
        """eval∘(w × id)"""
        return category.compose_maps(
            exponential.eval,
            category.product_map(source, exponential.domain, w, category.identity(e)),
        )

    v = sample_map(category, source.object, exponential.target, rng)
    curried = exponential.curry(v)
    laws.check("exponential_beta", "eval∘(curry v × id) = v", uncurry(curried).v, v.v)

    w = sample_map(category, g, exponential.object, rng)
    laws.check(
        "exponential_eta",
        "curry(eval∘(w × id)) = w",
        exponential.curry(uncurry(w)).v,
        w.v,
    )

    for raw in (curried.v, rng.choice(MAP_SEEDS)):
        candidate = category.restrict(g, exponential.object, raw)
        if category.equality.eq(uncurry(candidate).v, v.v).is_equal:
            laws.check(
                "exponential_unique",
                "eval∘(w × id) = v ⇒ E∘w = curry(v)",
                after(exponential.object.term, candidate.v),
                curried.v,
            )


def _single_identities(
    category: KaroubiCategory,
    builder: ReportBuilder,
    base: list[Idempotent],
    algebra: Algebra | None,
    rng: random.Random,
    samples: int,
    prefix: str,
) -> None:
    """E(I,I) = 𝟙, the pairing retract, curry(eval) = id and 𝟙^𝟙 inside A(2)"""
    identity, one = base[0], base[1]
    builder.check_eq(
        f"{prefix}.exponential_of_identity",
        "λd. λz. I(d(Iz)) = 𝟙",
        category.exponential_object(identity, identity).object.term,
        ONE,
    )
    a, b = Var(0), Var(1)
    builder.check_eq(
        f"{prefix}.pairing_retract_first",
        "(λx.xab)T = a",
        App(apply(PAIR, a, b), T),
        a,
        context=("a", "b"),
    )
    builder.check_eq(
        f"{prefix}.pairing_retract_second",
        "(λx.xab)F = b",
        App(apply(PAIR, a, b), F),
        b,
        context=("a", "b"),
    )
    arrow = category.exponential_object(one, one)
    builder.check_eq(
        f"{prefix}.curry_eval",
        "curry(eval) = id on 𝟙^𝟙",
        arrow.curry(arrow.eval).v,
        arrow.object.term,
    )

    algebra = algebra or closed_term_algebra(equality=category.equality)
    a2 = retract_An(algebra, 2)
    image = builder.aggregate(
        f"{prefix}.exponential_in_A2", "𝟙₂((𝟙^𝟙) d) = (𝟙^𝟙) d", tolerance=0.05
    )
    for _ in range(max(samples, 1) * 5):
        d = algebra.sample(rng, normal=True)
        fixed = algebra.element(App(arrow.object.term, d.representative))
        image.add(a2.contains(fixed), [algebra.describe(fixed)])
