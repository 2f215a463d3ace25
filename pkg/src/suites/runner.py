"""
Suite runners: every check family wired to settings, seeds and one report
"""

import random
from collections.abc import Callable
from dataclasses import dataclass

from ..algebras import (
    action_laws,
    check_hom,
    closed_term_algebra,
    identity_hom,
    inclusion_hom,
    monoid_iso_check,
    monoid_laws,
    monoid_of,
    open_term_algebra,
    retract_checks,
    unique_hom,
)
from ..clones import (
    check_clone_laws,
    coproduct_embed,
    extension_theory,
    finite_endo_theory,
    function_space_theory,
    initial_term_theory,
    parameter_iso,
)
from ..config import Settings, get_settings
from ..fundamental import (
    eps_checks,
    eta_checks,
    naturality_check,
    theory_iso_witness,
    triangle_check,
)
from ..karoubi import KaroubiCategory, ccc_law_suite
from ..reporting import ReportBuilder, SuiteReport
from ..representation import (
    endo_lambda_theory,
    function_space_checks,
    functoriality_checks,
    product_checks,
    retraction_checks,
    u_functor_map,
    validate_composition,
)
from ..semiclosed import (
    abstraction_recover,
    check_theory_map,
    initial_lambda_theory,
    interpret,
    lambda_extension_theory,
    obstruction_table,
    retagging_map,
)
from ..terms import App, BetaEquality, TermGenerator, Var, Verdict, expand_constants, subst
from ..utils.mixins import LoggerMixin
from .identities import core_identities

SUITES = (
    "paper",
    "clone",
    "theory",
    "algebra",
    "representation",
    "karoubi",
    "fundamental",
    "obstruction",
)

# Alternative names accepted by run
SUITE_ALIASES = {"identities": "paper"}


@dataclass(frozen=True)
class SuiteOptions:
    """Per-invocation overrides of the settings"""

    seed: int = 0
    fuel: int = 10_000
    eta: bool = False
    exhaustive_finite: bool = False

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: object) -> "SuiteOptions":
        values: dict[str, object] = {
            "seed": settings.default_seed,
            "fuel": settings.default_fuel,
            "eta": settings.eta_mode,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)  # type: ignore[arg-type]


class SuiteRunner(LoggerMixin):
    """Runs named suites into one ReportBuilder

    Each check family draws from its own generator seeded by (seed, family),
    so reports do not depend on which other suites ran.
    """

    def __init__(
        self, options: SuiteOptions | None = None, settings: Settings | None = None
    ) -> None:
        self.settings = settings or get_settings()
        self.options = options or SuiteOptions.from_settings(self.settings)
        self.equality = BetaEquality(
            self.options.fuel, self.options.eta, self.settings.max_term_size
        )

    def rng(self, family: str) -> random.Random:
        return random.Random(f"{self.options.seed}:{family}")

    @property
    def runners(self) -> dict[str, Callable[[ReportBuilder], None]]:
        return {
            "paper": self.paper,
            "clone": self.clone,
            "theory": self.theory,
            "algebra": self.algebra,
            "representation": self.representation,
            "karoubi": self.karoubi,
            "fundamental": self.fundamental,
            "obstruction": self.obstruction,
        }

    def run(self, name: str) -> SuiteReport:
        name = SUITE_ALIASES.get(name, name)
        if name != "all" and name not in self.runners:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}, all")
        names = SUITES if name == "all" else (name,)
        builder = ReportBuilder(self.equality)
        for suite in names:
            self.logger.info("Suite started", suite=suite, seed=self.options.seed)
            self.runners[suite](builder)
            self.logger.info("Suite finished", suite=suite, records=len(builder.records))
        return builder.build(name, self.options.seed, self.options.fuel, self.options.eta)

    # Suites

    def paper(self, builder: ReportBuilder) -> None:
        core_identities(builder, prefix="paper")

    def clone(self, builder: ReportBuilder) -> None:
        samples = self.settings.clone_samples
        endo = finite_endo_theory(2)
        budget = "exhaustive" if self.options.exhaustive_finite else samples
        builder.add_law_report(
            "clone.endo2", check_clone_laws(endo, 2, budget, self.rng("clone.endo2"))
        )
        counts = [endo.cardinality(n) for n in range(3)]
        builder.record(
            "clone.endo2.counting",
            "|T(n)| = k^(k^n)",
            counts == [2, 4, 16],
            detail=f"|T(0..2)| = {counts}",
        )
        builder.record(
            "clone.endo2.enumeration",
            "enumerate(T(1)) lists k^k distinct tables",
            len({tuple(e.payload) for e in endo.enumerate(1)}) == 4,
        )
        builder.add_law_report(
            "clone.function_space.endo2",
            check_clone_laws(
                function_space_theory(endo, 1),
                1,
                budget,
                self.rng("clone.function_space.endo2"),
            ),
        )

        lam = initial_term_theory(self.equality)
        builder.add_law_report(
            "clone.lambda",
            check_clone_laws(lam, 2, samples, self.rng("clone.lambda")),
            tolerance=0.01,
        )
        extended = extension_theory(lam, closed_term_algebra(equality=self.equality))
        builder.add_law_report(
            "clone.lambda_ext",
            check_clone_laws(extended, 2, samples, self.rng("clone.lambda_ext")),
            tolerance=0.01,
        )
        builder.add_law_report(
            "clone.function_space.lambda",
            check_clone_laws(
                function_space_theory(lam, 2),
                2,
                samples,
                self.rng("clone.function_space.lambda"),
            ),
            tolerance=0.01,
        )

        rng = self.rng("clone.extension")
        agreement = builder.aggregate(
            "clone.extension.agreement",
            "Λ_{Λ(0)}(n) ≅ Λ(n) through the unfoldings",
            tolerance=0.05,
        )
        for _ in range(200):
            n = rng.randint(0, 2)
            e = extended.sample(n, rng)
            plain = lam.element(n, expand_constants(e.payload))
            agreement.add(
                self.equality.eq(e.payload, plain.payload),
                [extended.describe(e), lam.describe(plain)],
            )

        iso = parameter_iso(lam, 2)
        parameters = builder.aggregate(
            "clone.parameters.compose",
            "S_{S(p)}(n) ≅ S(n+p) commutes with composition",
            tolerance=0.05,
        )
        round_trip = builder.aggregate("clone.parameters.round_trip", "backward(forward e) = e")
        for _ in range(100):
            n, m = rng.randint(0, 2), rng.randint(0, 2)
            t = iso.extension.sample(n, rng)
            args = [iso.extension.sample(m, rng) for _ in range(n)]
            parameters.add(iso.compose_commutes(t, args, m))
            back = iso.backward(iso.forward(t))
            round_trip.add(iso.extension.element_eq(back, t), [iso.extension.describe(t)])

        left, right = coproduct_embed(lam, 1, 1)
        x = lam.proj(1, 0)
        builder.record(
            "clone.coproduct.blocks",
            "Var 0 ∈ Λ(1) embeds as Var 0 and Var 1",
            left(x).payload == Var(0) and right(x).payload == Var(1),
        )

    def theory(self, builder: ReportBuilder) -> None:
        lam = initial_lambda_theory(self.equality)
        rng = self.rng("theory.soundness")
        samples = self.settings.interpreter_samples
        generator = TermGenerator(rng, self.settings.random_term_size)
        soundness = builder.aggregate(
            "theory.interpreter.beta_soundness",
            "⟦(λz.s)u⟧ = ⟦s[u/z]⟧",
            tolerance=0.05,
        )
        endo = endo_lambda_theory(closed_term_algebra(lam))
        endo_soundness = builder.aggregate(
            "theory.interpreter.beta_soundness_U",
            "⟦(λz.s)u⟧ = ⟦s[u/z]⟧ in U_{Λ(0)}",
            tolerance=0.05,
        )
        for index in range(samples):
            n = rng.randint(0, 2)
            s, u = generator.term(n + 1), generator.term(n)
            redex = App(lam.lam(lam.theory.element(n + 1, s)).payload, u)
            contractum = subst(s, [*(Var(i) for i in range(n)), u], n + 1)
            lhs, rhs = interpret(redex, n, lam), interpret(contractum, n, lam)
            soundness.add(lam.element_eq(lhs, rhs), [lam.describe(lhs), lam.describe(rhs)])
            if index % 20 == 0:
                lhs, rhs = interpret(redex, n, endo), interpret(contractum, n, endo)
                endo_soundness.add(
                    endo.element_eq(lhs, rhs), [endo.describe(lhs), endo.describe(rhs)]
                )

        rng = self.rng("theory.abstraction")
        recovered = builder.aggregate(
            "theory.abstraction.recover", "s = app_n(λⁿs, z1..zn)", tolerance=0.05
        )
        fixed = builder.aggregate(
            "theory.abstraction.one_fixed", "𝟙_n λⁿs = λⁿs", tolerance=0.05
        )
        for _ in range(100):
            result = abstraction_recover(lam, lam.sample(rng.randint(0, 3), rng))
            recovered.add(result.recovered)
            fixed.add(result.one_fixed)

        algebra = open_term_algebra(1, self.equality)
        extension = lambda_extension_theory(algebra, self.equality)
        builder.extend(
            check_theory_map(
                retagging_map(lam, extension),
                samples=100,
                rng=self.rng("theory.initial_map"),
                prefix="theory.map.lambda_to_ext",
            )
        )

    def algebra(self, builder: ReportBuilder) -> None:
        lam = initial_lambda_theory(self.equality)
        closed = closed_term_algebra(lam)
        open_one = open_term_algebra(1, self.equality)
        builder.extend(action_laws(closed, 100, self.rng("algebra.action"), prefix="algebra.action"))
        builder.extend(
            monoid_laws(monoid_of(closed), 100, self.rng("algebra.monoid"), prefix="algebra.monoid")
        )
        builder.extend(retract_checks(closed, 3, 50, self.rng("algebra.retract"), prefix="algebra.retract"))
        builder.extend(monoid_iso_check(lam, 100, self.rng("algebra.monoid_iso"), prefix="algebra.monoid_iso"))
        builder.extend(
            check_hom(identity_hom(closed), 100, self.rng("algebra.hom.id"), prefix="algebra.hom.identity")
        )
        builder.extend(
            check_hom(
                inclusion_hom(closed, open_one),
                100,
                self.rng("algebra.hom.inclusion"),
                prefix="algebra.hom.inclusion",
            )
        )
        builder.extend(
            check_hom(
                unique_hom(closed, open_one),
                100,
                self.rng("algebra.hom.unique"),
                prefix="algebra.hom.unique",
            )
        )

    def representation(self, builder: ReportBuilder) -> None:
        algebra = closed_term_algebra(equality=self.equality)
        settings = self.settings
        builder.extend(
            function_space_checks(
                algebra,
                generators=settings.representation_samples,
                maps=settings.round_trip_maps,
                pairs=settings.round_trip_pairs,
                rng=self.rng("representation.function_space"),
                prefix="representation.function_space",
            )
        )
        builder.extend(
            product_checks(algebra, 50, self.rng("representation.products"), "representation.products")
        )

        endo = endo_lambda_theory(algebra)
        oracle = validate_composition(
            endo,
            samples=settings.representation_samples,
            rng=self.rng("representation.oracle"),
            prefix="representation.endo",
        )
        builder.extend(oracle)
        if any(record.verdict is Verdict.DISTINCT for record in oracle):
            self.logger.error("Composition formula refuted, U_A harness skipped")
            builder.record(
                "representation.endo.harness",
                "U_A laws checked after the composition oracle",
                False,
                detail="skipped: the composition oracle found a counterexample",
            )
            return

        builder.add_law_report(
            "representation.endo.clone",
            check_clone_laws(endo.theory, 2, 100, self.rng("representation.endo.clone")),
            tolerance=0.05,
        )
        builder.extend(
            retraction_checks(endo, 100, self.rng("representation.endo.retraction"), prefix="representation.endo")
        )
        open_one = open_term_algebra(1, self.equality)
        inclusion = inclusion_hom(algebra, open_one)
        builder.extend(
            check_theory_map(
                u_functor_map(inclusion, endo),
                samples=50,
                rng=self.rng("representation.functor"),
                prefix="representation.functor.inclusion",
            )
        )
        builder.extend(
            functoriality_checks(
                inclusion,
                identity_hom(open_one),
                samples=50,
                rng=self.rng("representation.functoriality"),
                prefix="representation.functoriality",
            )
        )

    def karoubi(self, builder: ReportBuilder) -> None:
        builder.extend(
            ccc_law_suite(
                KaroubiCategory(self.equality),
                samples=self.settings.karoubi_samples,
                rng=self.rng("karoubi"),
            )
        )

    def fundamental(self, builder: ReportBuilder) -> None:
        settings = self.settings
        lam = initial_lambda_theory(self.equality)
        closed = closed_term_algebra(lam)
        builder.extend(
            triangle_check(
                lam, settings.fundamental_samples, self.rng("fundamental.triangle"), prefix="fundamental.triangle"
            )
        )
        for name, hom in (
            ("identity", identity_hom(closed)),
            ("inclusion", inclusion_hom(closed, open_term_algebra(1, self.equality))),
        ):
            builder.extend(
                naturality_check(
                    hom,
                    settings.naturality_samples,
                    self.rng(f"fundamental.naturality.{name}"),
                    prefix=f"fundamental.naturality.{name}",
                )
            )
        builder.extend(eta_checks(lam, 100, self.rng("fundamental.eta"), prefix="fundamental.eta"))
        builder.extend(eps_checks(closed, 100, self.rng("fundamental.eps"), prefix="fundamental.eps"))
        builder.extend(
            theory_iso_witness(lam, 100, self.rng("fundamental.iso"), prefix="fundamental.iso").records
        )
        extension = lambda_extension_theory(open_term_algebra(1, self.equality), self.equality)
        builder.extend(
            eta_checks(extension, 30, self.rng("fundamental.eta_ext"), prefix="fundamental.eta_ext")
        )

    def obstruction(self, builder: ReportBuilder) -> None:
        table = obstruction_table(4, 2)
        for witness in table:
            expected = witness.carrier_size == 1
            builder.record(
                f"obstruction.k{witness.carrier_size}.n{witness.arity}",
                "|T(n+1)| > |T(n)| rules out a retraction T(n+1) -> T(n) with section",
                witness.semi_closed_possible == expected and witness.larger >= witness.smaller,
                detail=witness.explanation,
            )
        binary = next(w for w in table if w.carrier_size == 2 and w.arity == 1)
        builder.record(
            "obstruction.k2.cardinalities",
            "(|T(1)|, |T(2)|) = (4, 16) for |X| = 2",
            binary.cardinalities == (4, 16),
            detail=f"{binary.cardinalities}",
        )
