"""Test λ-theories: semi-closed structure, interpretation and theory maps"""

import random

import pytest

from src.algebras import closed_term_algebra
from src.clones import CloneArityError, TheoryElement, finite_endo_theory
from src.semiclosed import (
    LambdaTheoryError,
    TheoryMap,
    abstraction_recover,
    check_theory_map,
    identity_map,
    initial_lambda_theory,
    interpret,
    lambda_extension_theory,
    obstruction_table,
    retagging_map,
    semi_closed_obstruction,
)
from src.terms import (
    ONE,
    App,
    BetaEquality,
    Const,
    I,
    Lam,
    T,
    Var,
    application_chain,
    one_n,
    parse,
)


class TestSemiClosedStructure:
    """Test rho, lam and the derived operations of Λ"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.theory = initial_lambda_theory(BetaEquality(fuel=2000))
        self.terms = self.theory.theory

    def test_rho_and_lam(self) -> None:
        """rho appends the fresh variable, lam binds the last slot"""
        a = self.terms.element(1, Var(0))
        assert self.theory.rho(a).payload == App(Var(0), Var(1))

        s = self.terms.element(2, App(Var(0), Var(1)))
        assert self.theory.lam(s).payload == Lam(App(Var(1), Var(0)))
        assert self.theory.lam(s).arity == 1

    def test_rho_lam_retraction(self) -> None:
        """rho(lam s) = s"""
        rng = random.Random(1)
        for n in range(4):
            s = self.theory.sample(n + 1, rng)
            back = self.theory.rho(self.theory.lam(s))
            assert not self.theory.element_eq(back, s).is_distinct

    def test_derived_operations(self) -> None:
        """app, 𝟙 and 𝟙_n agree with the combinators"""
        assert self.theory.app.payload == App(Var(0), Var(1))
        assert self.theory.one.payload == ONE
        assert self.theory.app_n(3).payload == application_chain(3)
        for n in range(4):
            assert self.theory.one_n(n).payload == one_n(n)

    def test_apply(self) -> None:
        """apply concatenates with app"""
        a = self.terms.element(0, T)
        result = self.theory.apply(a, self.terms.element(0, I), self.terms.element(0, ONE))
        assert self.theory.element_eq(result, self.terms.element(0, I)).is_equal

    def test_lam_needs_positive_arity(self) -> None:
        """There is nothing to bind at arity 0"""
        with pytest.raises(CloneArityError):
            self.theory.lam(self.terms.element(0, I))
        with pytest.raises(CloneArityError):
            self.theory.app_n(-1)

    def test_abstraction_recovers(self) -> None:
        """s = app_n(λⁿs, z1..zn) and 𝟙_n λⁿs = λⁿs"""
        s = self.terms.element(3, App(Var(2), App(Var(0), Var(1))))
        result = abstraction_recover(self.theory, s)

        assert result.passed
        assert result.hat.arity == 0

    def test_abstraction_of_constant(self) -> None:
        """At arity 0 the abstraction is the element itself"""
        s = self.terms.element(0, T)
        result = abstraction_recover(self.theory, s)

        assert result.hat.payload == T
        assert result.passed


class TestInterpreter:
    """Test interpretation of syntax in λ-theories"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.theory = initial_lambda_theory()

    def test_interpretation_in_lambda_is_identity_up_to_beta(self) -> None:
        """⟦t⟧ = t in Λ"""
        for text in ("\\x. y x", "y (\\x. x y)", "\\a b. b a y"):
            term = parse(text, ["y"])
            value = interpret(term, 1, self.theory)
            assert value.arity == 1
            assert self.theory.theory.equality.eq(value.payload, term).is_equal

    def test_scope_check(self) -> None:
        """The term must fit the context"""
        with pytest.raises(CloneArityError):
            interpret(Var(2), 1, self.theory)

    def test_constants(self) -> None:
        """Constants with unfoldings expand, inert ones have no meaning in Λ"""
        value = interpret(Const("k", T), 0, self.theory)
        assert value.payload == T
        with pytest.raises(LambdaTheoryError):
            interpret(Const("c"), 0, self.theory)

    def test_constants_in_extension(self) -> None:
        """In Λ_A a generator of A stays a constant"""
        extension = lambda_extension_theory(closed_term_algebra())
        value = interpret(Const("T", T), 2, extension)

        assert value.arity == 2
        assert value.payload == Const("T", T)

    def test_beta_soundness(self) -> None:
        """⟦(λz.s)u⟧ = ⟦s[u/z]⟧"""
        redex = parse("(\\z. z y z) (\\w. w)", ["y"])
        contractum = parse("(\\w. w) y (\\w. w)", ["y"])
        lhs = interpret(redex, 1, self.theory)
        rhs = interpret(contractum, 1, self.theory)

        assert self.theory.element_eq(lhs, rhs).is_equal


class TestTheoryMaps:
    """Test maps of λ-theories and their certification"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.source = initial_lambda_theory()
        self.target = lambda_extension_theory(closed_term_algebra())

    def test_identity_map(self) -> None:
        """The identity passes every check"""
        records = check_theory_map(identity_map(self.source), 30, random.Random(0))

        assert records
        assert all(record.within_tolerance for record in records)

    def test_unique_map_into_extension(self) -> None:
        """Λ -> Λ_A keeps representatives"""
        f = retagging_map(self.source, self.target)
        image = f(self.source.app)

        assert image.theory_id == self.target.theory_id
        records = check_theory_map(f, 30, random.Random(0), prefix="unique")
        assert {record.id for record in records} >= {"unique.app", "unique.one", "unique.lam"}
        assert all(record.within_tolerance for record in records)

    def test_broken_map_is_refuted(self) -> None:
        """A map that drops its argument into T is caught"""
        broken = TheoryMap(
            "broken",
            self.source,
            self.source,
            lambda e: TheoryElement(e.theory_id, e.arity, App(e.payload, T)),
        )
        records = check_theory_map(broken, 30, random.Random(0), prefix="broken")
        verdicts = {record.id: record for record in records}

        assert not verdicts["broken.app"].passed
        assert not all(record.passed for record in records)

    def test_composite(self) -> None:
        """then composes maps"""
        f = retagging_map(self.source, self.target)
        composite = identity_map(self.source).then(f)

        assert composite.target is self.target
        assert composite(self.source.one).payload == ONE

    def test_arity_preserved(self) -> None:
        """A map that changes arity is rejected at the call"""
        shrinking = TheoryMap(
            "shrinking",
            self.source,
            self.source,
            lambda e: TheoryElement(e.theory_id, 0, I),
        )
        with pytest.raises(CloneArityError):
            shrinking(self.source.app)


class TestObstruction:
    """Test the counting obstruction for finite clones"""

    def test_two_element_carrier(self) -> None:
        """(|T(1)|, |T(2)|) = (4, 16) rules out semi-closed structure"""
        witness = semi_closed_obstruction(finite_endo_theory(2), 1)

        assert witness.cardinalities == (4, 16)
        assert not witness.semi_closed_possible
        assert "cannot be onto" in witness.explanation

    def test_table(self) -> None:
        """Only the one-point carrier escapes"""
        table = obstruction_table(4, 2)

        assert len(table) == 12
        for witness in table:
            assert witness.semi_closed_possible == (witness.carrier_size == 1)
            assert witness.larger >= witness.smaller
