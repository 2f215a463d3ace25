"""Test the category of retracts and its cartesian closed structure"""

import dataclasses
import random

import pytest

from src.karoubi import (
    MAP_SEEDS,
    BoundaryMismatchError,
    HomConditionError,
    KaroubiCategory,
    NotIdempotentError,
    RetractMap,
    base_objects,
    ccc_law_suite,
    ccc_roster,
    product_term,
    sample_map,
    snd_term,
)
from src.terms import ONE, TERMINAL, App, BetaEquality, F, I, Lam, T, Var, apply, one_n


class TestCategory:
    """Test objects, maps and composition"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.category = KaroubiCategory(BetaEquality(fuel=2000))
        self.identity = self.category.idempotent(I, "I")
        self.one = self.category.idempotent(ONE, "𝟙")

    def test_idempotents(self) -> None:
        """𝟙_n are idempotent, T is not"""
        assert self.category.idempotent(one_n(2), "𝟙₂").term == one_n(2)
        with pytest.raises(NotIdempotentError):
            self.category.idempotent(T, "T")

    def test_hom_condition(self) -> None:
        """f∘v∘e = v or the map is rejected"""
        v = self.category.hom(self.identity, self.identity, T)
        assert v.v == T

        with pytest.raises(HomConditionError):
            self.category.hom(self.one, self.one, Lam(App(Var(0), I)))

    def test_restrict(self) -> None:
        """f∘u∘e is always a map"""
        v = self.category.restrict(self.one, self.one, Lam(App(Var(0), I)))
        assert v.source is self.one
        assert v.target is self.one

    def test_identity_and_composition(self) -> None:
        """id_e is e, composites check their boundary"""
        v = self.category.restrict(self.one, self.one, T)
        composite = self.category.compose_maps(self.category.identity(self.one), v)

        assert self.category.identity(self.one).v == ONE
        assert self.category.equality.eq(composite.v, v.v).is_equal
        with pytest.raises(BoundaryMismatchError):
            self.category.compose_maps(v, self.category.identity(self.identity))

    def test_terminal(self) -> None:
        """The terminal object is λx.I"""
        terminal = self.category.terminal()

        assert terminal.term == TERMINAL
        assert self.category.to_terminal(self.one).v == TERMINAL

    def test_maps_print(self) -> None:
        """Maps print with their boundary"""
        assert str(self.category.identity(self.one)).endswith(": 𝟙 -> 𝟙")


class TestCartesianClosedStructure:
    """Test products and exponentials"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.category = KaroubiCategory(BetaEquality(fuel=2000))
        self.identity, self.one, self.one_2, _, self.terminal = base_objects(self.category)

    def test_product_projections(self) -> None:
        """fst∘⟨a,b⟩ = a and snd∘⟨a,b⟩ = b"""
        product = self.category.product_object(self.one, self.one)
        a = self.category.identity(self.one)
        b = self.category.restrict(self.one, self.one, T)
        paired = product.pair(a, b)

        first = self.category.compose_maps(product.fst, paired)
        second = self.category.compose_maps(product.snd, paired)
        assert self.category.equality.eq(first.v, a.v).is_equal
        assert self.category.equality.eq(second.v, b.v).is_equal
        assert product.object.factors == (self.one, self.one)

    def test_pairing_needs_shared_source(self) -> None:
        """Both legs leave the same object"""
        product = self.category.product_object(self.one, self.one)
        a = self.category.identity(self.one)
        b = self.category.restrict(self.identity, self.one, T)
        with pytest.raises(BoundaryMismatchError):
            product.pair(a, b)

    def test_exponential_of_identity(self) -> None:
        """E(I, I) = 𝟙"""
        exponential = self.category.exponential_object(self.identity, self.identity)
        assert exponential.object.term == ONE

    def test_curry_needs_product(self) -> None:
        """curry only accepts maps out of g × e"""
        exponential = self.category.exponential_object(self.one, self.one)
        with pytest.raises(BoundaryMismatchError):
            exponential.curry(self.category.identity(self.one))

    def test_curry_eval(self) -> None:
        """curry(eval) = id on 𝟙^𝟙"""
        exponential = self.category.exponential_object(self.one, self.one)
        curried = exponential.curry(exponential.eval)

        assert self.category.equality.eq(curried.v, exponential.object.term).is_equal

    def test_product_term_shape(self) -> None:
        """λc. λx. x(e(cT))(f(cF))"""
        body = apply(Var(0), App(I, App(Var(1), T)), App(I, App(Var(1), F)))
        assert product_term(I, I) == Lam(Lam(body))

    def test_roster(self) -> None:
        """Depth adds products and exponentials"""
        assert len(ccc_roster(self.category, depth=0)) == 5
        assert len(ccc_roster(self.category, depth=1)) == 13
        assert len(ccc_roster(self.category, depth=2)) == 17

    def test_sample_map(self) -> None:
        """Sampled maps come from the seed list restricted to the boundary"""
        v = sample_map(self.category, self.one, self.one_2, random.Random(0))

        assert isinstance(v, RetractMap)
        assert len(MAP_SEEDS) == 12


class TestLawSuite:
    """Test the cartesian closed law suite"""

    def test_small_suite(self) -> None:
        """Every law is checked and none is refuted"""
        records = ccc_law_suite(samples=2, rng=random.Random(0), depth=1)
        ids = {record.id for record in records}

        for law in (
            "idempotent",
            "identity_left",
            "associativity",
            "product_fst",
            "product_unique",
            "exponential_beta",
            "exponential_eta",
            "curry_eval",
            "exponential_of_identity",
        ):
            assert f"karoubi.{law}" in ids
        assert all(record.verdict.value != "Distinct" for record in records)

    def test_mutated_projection_is_caught(self) -> None:
        """Swapping fst for snd breaks fst∘⟨a,b⟩ = a"""
        category = KaroubiCategory(BetaEquality(fuel=2000), eager=False)
        one = category.idempotent(ONE, "𝟙")
        product = category.product_object(one, one)
        broken = dataclasses.replace(
            product, fst=RetractMap(product.object, one, snd_term(ONE))
        )
        a = category.identity(one)
        b = category.restrict(one, one, T)

        first = category.compose_maps(broken.fst, broken.pair(a, b))
        assert category.equality.eq(first.v, a.v).is_distinct
