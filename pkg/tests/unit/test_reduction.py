"""Test normal-order reduction and fuel-bounded equality"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.terms import (
    OMEGA,
    ONE,
    THETA,
    App,
    BetaEquality,
    Const,
    F,
    FuelExhausted,
    I,
    Lam,
    NormalForm,
    T,
    Term,
    TermGenerator,
    Var,
    Verdict,
    apply,
    beta_eq,
    beta_step,
    expand_constants,
    instantiate,
    normalize,
    parse,
    print_term,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestBetaStep:
    """Test single reduction steps"""

    def test_contracts_leftmost_outermost(self) -> None:
        """The head redex goes first"""
        term = App(I, App(I, Var(0)))
        assert beta_step(term) == App(I, Var(0))

    def test_normal_form_has_no_step(self) -> None:
        """Normal forms do not reduce"""
        assert beta_step(Lam(App(Var(0), Var(1)))) is None

    def test_reduces_under_binders(self) -> None:
        """Normal order goes under λ"""
        assert beta_step(Lam(App(I, Var(0)))) == Lam(Var(0))

    def test_unfolds_head_constant(self) -> None:
        """A head constant with an unfolding unfolds"""
        term = App(Const("id", I), Var(0))
        assert beta_step(term) == App(I, Var(0))

    def test_inert_constant_is_stuck(self) -> None:
        """Inert constants block nothing but never reduce"""
        assert beta_step(App(Const("c"), Var(0))) is None

    def test_eta_only_when_enabled(self) -> None:
        """λx. f x contracts to f only with η on"""
        term = Lam(App(Var(1), Var(0)))
        assert beta_step(term) is None
        assert beta_step(term, eta=True) == Var(0)


class TestNormalize:
    """Test fuel-bounded normalization"""

    def test_one_applied(self) -> None:
        """𝟙 a b = a b"""
        outcome = normalize(apply(ONE, Var(0), Var(1)))

        assert isinstance(outcome, NormalForm)
        assert outcome.term == App(Var(0), Var(1))
        assert outcome.steps == 2

    def test_omega_exhausts_fuel(self) -> None:
        """Ω never reaches a normal form"""
        outcome = normalize(OMEGA, fuel=100)

        assert isinstance(outcome, FuelExhausted)
        assert outcome.steps == 100

    def test_normal_order_finds_normal_form(self) -> None:
        """T I Ω = I although Ω diverges"""
        outcome = normalize(apply(T, I, OMEGA), fuel=10)

        assert isinstance(outcome, NormalForm)
        assert outcome.term == I

    def test_fuel_must_be_positive(self) -> None:
        """Zero fuel is a usage error"""
        with pytest.raises(ValueError):
            normalize(I, fuel=0)

    def test_size_ceiling(self) -> None:
        """Terms outgrowing the ceiling are reported as exhausted"""
        grow = parse("(\\x. x x x) (\\x. x x x)")
        outcome = normalize(grow, fuel=1000, max_size=200)

        assert isinstance(outcome, FuelExhausted)
        assert outcome.steps < 1000

    def test_expand_constants(self) -> None:
        """Unfoldings are expanded everywhere, inert constants stay"""
        term = Lam(App(Const("one", ONE), Const("c")))
        assert expand_constants(term) == Lam(App(ONE, Const("c")))


class TestBetaEquality:
    """Test the lock-step equality verdicts"""

    def test_booleans_distinct(self) -> None:
        """T and F are distinct normal forms"""
        verdict = beta_eq(T, F)

        assert verdict.is_distinct
        assert verdict.verdict is Verdict.DISTINCT

    def test_fixed_point(self) -> None:
        """Θf = f(Θf) within 50 steps"""
        f = Var(0)
        verdict = beta_eq(App(THETA, f), App(f, App(THETA, f)), fuel=50)

        assert verdict.is_equal
        assert verdict.steps <= 50

    def test_omega_against_identity_is_unknown(self) -> None:
        """Ω vs I runs out of fuel"""
        verdict = beta_eq(OMEGA, I, fuel=100)

        assert verdict.is_unknown
        assert verdict.steps == 100

    def test_omega_equals_itself(self) -> None:
        """Shared terms decide equality without normal forms"""
        assert beta_eq(OMEGA, OMEGA, fuel=10).is_equal

    def test_constants_compare_through_unfoldings(self) -> None:
        """#app x = 𝟙 x"""
        assert beta_eq(App(Const("app", ONE), Var(0)), Lam(App(Var(1), Var(0)))).is_equal

    def test_eta_mode(self) -> None:
        """λx. y x and y differ unless η is on"""
        term = Lam(App(Var(1), Var(0)))
        assert beta_eq(term, Var(0)).is_distinct
        assert beta_eq(term, Var(0), eta=True).is_equal

    def test_beta_equality_helpers(self) -> None:
        """tidy keeps terms without normal forms"""
        equality = BetaEquality(fuel=20)

        assert equality.tidy(App(I, T)) == T
        assert equality.tidy(OMEGA) == OMEGA
        assert equality.with_fuel(5).fuel == 5
        with pytest.raises(ValueError):
            BetaEquality(fuel=0)

    @settings(max_examples=50, deadline=None)
    @given(seed=seeds)
    def test_redex_equals_contractum(self, seed: int) -> None:
        """(λz.s)u =β s[u/z] for random s, u"""
        generator = TermGenerator(random.Random(seed), 12)
        redex, body, arg = generator.redex(context=1)

        verdict = beta_eq(redex, instantiate(body, arg), fuel=200)

        assert verdict.is_equal

    @settings(max_examples=50, deadline=None)
    @given(seed=seeds)
    def test_reflexive(self, seed: int) -> None:
        """Every term equals itself at zero steps"""
        term = TermGenerator(random.Random(seed), 25).term(2)
        verdict = beta_eq(term, term)

        assert verdict.is_equal
        assert verdict.steps == 0

    @settings(max_examples=50, deadline=None)
    @given(seed=seeds)
    def test_normal_forms_are_fixed(self, seed: int) -> None:
        """normalize is idempotent on what it finishes"""
        term = TermGenerator(random.Random(seed), 15).closed()
        outcome = normalize(term, fuel=300)
        if isinstance(outcome, NormalForm):
            assert beta_step(outcome.term) is None
            assert normalize(outcome.term).steps == 0


def one_step_reducts(t: Term) -> set[Term]:
    """Every term reached by contracting one redex, in any position"""
    match t:
        case App(fun, arg):
            found = {App(f, arg) for f in one_step_reducts(fun)}
            found |= {App(fun, a) for a in one_step_reducts(arg)}
            if isinstance(fun, Lam):
                found.add(instantiate(fun.body, arg))
            return found
        case Lam(body):
            return {Lam(b) for b in one_step_reducts(body)}
        case _:
            return set()


def reduction_graph(t: Term, depth: int = 3, limit: int = 200) -> set[Term]:
    """Terms reachable from t in at most depth steps, breadth first"""
    seen = {t}
    frontier = [t]
    for _ in range(depth):
        following: list[Term] = []
        for term in frontier:
            for reduct in one_step_reducts(term):
                if reduct not in seen and len(seen) < limit and reduct.size <= 200:
                    seen.add(reduct)
                    following.append(reduct)
        frontier = following
    return seen


class TestReductionProperties:
    """Test verdicts against an exhaustive reduction graph"""

    def test_graph_of_a_redex(self) -> None:
        """I (I x) reaches I x by two different redexes and then x"""
        term = App(I, App(I, Var(0)))

        assert one_step_reducts(term) == {App(I, Var(0))}
        assert reduction_graph(term) == {term, App(I, Var(0)), Var(0)}

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds)
    def test_distinct_is_sound(self, seed: int) -> None:
        """Sides judged Distinct share no reduct"""
        generator = TermGenerator(random.Random(seed), 8)
        s, u = generator.term(1), generator.term(1)

        verdict = beta_eq(s, u, fuel=200)

        if verdict.is_distinct:
            assert reduction_graph(s).isdisjoint(reduction_graph(u))
            left, right = normalize(s, 200), normalize(u, 200)
            assert isinstance(left, NormalForm)
            assert isinstance(right, NormalForm)
            assert left.term != right.term

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_normalize_is_deterministic(self, seed: int) -> None:
        """Equal inputs give identical outcomes, step counts included"""
        term = TermGenerator(random.Random(seed), 20).term(1)
        copy = parse(print_term(term, ["y"]), ["y"])

        first, second = normalize(term, fuel=300), normalize(copy, fuel=300)

        assert first == second
        assert repr(first) == repr(second)
        assert beta_eq(term, T, fuel=100) == beta_eq(copy, T, fuel=100)
