"""Test the function space A(2) ≅ U^U, products and the λ-theory U_A"""

import random

import pytest

from src.algebras import (
    AlgebraError,
    AlgebraMap,
    MembershipError,
    closed_term_algebra,
    identity_hom,
    inclusion_hom,
    open_term_algebra,
    trivial_algebra,
)
from src.clones import TheoryError
from src.representation import (
    CompetingCone,
    d_of,
    endo_lambda_theory,
    evaluation,
    function_space_checks,
    functoriality_checks,
    generator_of_evaluation,
    pairing_witness,
    phi_of,
    product_checks,
    product_witnesses,
    retraction_checks,
    u_functor_map,
    validate_composition,
)
from src.terms import ONE, App, Const, I, Lam, T, Var, apply, lams, one_n


class TestFunctionSpace:
    """Test equivariant maps and their generators"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.algebra = closed_term_algebra()

    def test_evaluation_generator(self) -> None:
        """𝟙 generates (a, b) -> λy. ay(by)"""
        phi = phi_of(self.algebra, self.algebra.element(generator_of_evaluation()))
        value = phi(self.algebra.element(T), self.algebra.element(I))

        assert generator_of_evaluation() == ONE
        assert self.algebra.eq(value, self.algebra.element(I)).is_equal

    def test_one_two_generates_padded_evaluation(self) -> None:
        """𝟙₂ generates (a, b) -> λy. 𝟙(ay(by))"""
        phi = phi_of(self.algebra, self.algebra.element(one_n(2)))
        value = phi(self.algebra.element(T), self.algebra.element(I))

        assert self.algebra.eq(value, self.algebra.element(ONE)).is_equal

    def test_generator_round_trip(self) -> None:
        """d(φ_d) = d"""
        d = self.algebra.element(one_n(2))
        back = d_of(self.algebra, phi_of(self.algebra, d))

        assert self.algebra.eq(back, d).is_equal

    def test_d_of_bare_procedure(self) -> None:
        """A procedure that returns its first argument is generated by T"""
        d = d_of(self.algebra, lambda a, b: a)
        assert self.algebra.eq(d, self.algebra.element(T)).is_equal

    def test_phi_checks_membership(self) -> None:
        """Generators must lie in A(2)"""
        algebra = open_term_algebra(1)
        with pytest.raises(MembershipError):
            phi_of(algebra, algebra.constant("v0"))

    def test_evaluation(self) -> None:
        """(a1..an) -> λy. d y (a1 y) .. (an y)"""
        d = self.algebra.element(lams(2, Var(0)))
        value = evaluation(self.algebra, d, [self.algebra.element(T)])

        assert value.representative == Lam(apply(d.representative, Var(0), App(T, Var(0))))

    def test_function_space_checks(self) -> None:
        """Both round trips, equivariance and the reflexive retract"""
        records = function_space_checks(
            self.algebra, generators=10, maps=4, pairs=2, rng=random.Random(0), prefix="fs"
        )

        assert {record.id for record in records} == {
            "fs.round_trip_generator",
            "fs.equivariance",
            "fs.reflexive_retract",
            "fs.round_trip_map",
        }
        assert all(record.verdict.value != "Distinct" for record in records)


class TestProducts:
    """Test the product witnesses in the monoid"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.algebra = closed_term_algebra()

    def test_pairing_witness_shape(self) -> None:
        """λw. λx. x(b1 w)(b2 w)"""
        assert pairing_witness(I, T) == Lam(Lam(apply(Var(0), App(I, Var(1)), App(T, Var(1)))))

    def test_witnesses(self) -> None:
        """p∘s = b1, q∘s = b2 and the terminal law"""
        witness = product_witnesses(
            self.algebra, self.algebra.element(I), self.algebra.element(ONE)
        )

        assert witness.passed
        assert witness.mediator is None
        assert {record.id for record in witness.records} == {
            "product.first",
            "product.second",
            "product.terminal",
        }

    def test_mediator(self) -> None:
        """A competing cone factors through s"""
        hom = identity_hom(self.algebra)
        c, a1, a2 = (self.algebra.element(t) for t in (I, I, ONE))
        b1 = self.algebra.element(Lam(App(a1.representative, App(I, Var(0)))))
        b2 = self.algebra.element(Lam(App(a2.representative, App(I, Var(0)))))
        witness = product_witnesses(
            self.algebra, b1, b2, CompetingCone(hom, c, a1, a2)
        )

        assert witness.mediator is not None
        assert witness.passed

    def test_members_required(self) -> None:
        """The legs must be elements of A(1)"""
        algebra = open_term_algebra(1)
        with pytest.raises(MembershipError):
            product_witnesses(algebra, algebra.constant("v0"), algebra.element(I))

    def test_product_checks(self) -> None:
        """Seeded cones pass"""
        records = product_checks(self.algebra, samples=5, rng=random.Random(0), prefix="p")

        assert "p.mediator_factor" in {record.id for record in records}
        assert all(record.verdict.value != "Distinct" for record in records)


class TestEndoTheory:
    """Test U_A as a λ-theory"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.algebra = closed_term_algebra()
        self.theory = endo_lambda_theory(self.algebra)

    def test_projection(self) -> None:
        """proj(n, i) = λy w0 .. w(n-1). wi"""
        assert self.theory.proj(2, 0).payload == lams(3, Var(1))
        assert self.theory.proj(2, 1).payload == lams(3, Var(0))

    def test_projection_law(self) -> None:
        """proj(2, 0)(a, b) = a"""
        rng = random.Random(2)
        for _ in range(5):
            a, b = self.theory.sample(1, rng), self.theory.sample(1, rng)
            composed = self.theory.compose(self.theory.proj(2, 0), [a, b])
            assert not self.theory.element_eq(composed, a).is_distinct

    def test_trivial_algebra_rejected(self) -> None:
        """The trivial algebra has no representatives"""
        with pytest.raises(TheoryError):
            endo_lambda_theory(trivial_algebra())

    def test_membership_checked(self) -> None:
        """With checking on, payloads must be fixed by 𝟙_(n+1)"""
        algebra = open_term_algebra(1)
        theory = endo_lambda_theory(algebra, check_membership=True)

        assert theory.theory.element(1, T).payload == T
        with pytest.raises(MembershipError):
            theory.theory.element(0, Const("v0"))

    def test_constants_are_global_elements(self) -> None:
        """c goes to λy. c"""
        value = self.theory.interpret_constant(Const("T", T))

        assert value.payload == Lam(Const("T", T))
        assert value.arity == 0
        with pytest.raises(MembershipError):
            self.theory.interpret_constant(Const("nowhere"))

    def test_composition_oracle(self) -> None:
        """The compose formula matches composed evaluation maps"""
        records = validate_composition(self.theory, samples=10, rng=random.Random(0))

        assert [record.id for record in records] == ["endo.lambda(0).compose_oracle"]
        assert records[0].verdict.value != "Distinct"

    def test_retraction(self) -> None:
        """rho(lam e) = e"""
        records = retraction_checks(self.theory, samples=10, rng=random.Random(0), prefix="r")

        assert {record.id for record in records} == {"r.retraction", "r.lam_fixed"}
        assert all(record.verdict.value != "Distinct" for record in records)


class TestFunctor:
    """Test U_f and functoriality"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.closed = closed_term_algebra()
        self.open = open_term_algebra(1)

    def test_induced_map(self) -> None:
        """U_f applies f to representatives"""
        f = inclusion_hom(self.closed, self.open)
        u_f = u_functor_map(f)
        element = u_f.source.proj(2, 1)

        image = u_f(element)
        assert image.payload == element.payload
        assert image.theory_id == u_f.target.theory_id

    def test_verify_rejects_broken_hom(self) -> None:
        """A definite homomorphism failure stops the construction"""
        broken = AlgebraMap("broken", self.closed, self.closed, transform=lambda t: App(t, T))
        with pytest.raises(AlgebraError):
            u_functor_map(broken, verify=10, rng=random.Random(0))

    def test_functoriality(self) -> None:
        """U(g∘f) = U(g)∘U(f) and U(id) = id"""
        f = inclusion_hom(self.closed, self.open)
        g = identity_hom(self.open)
        records = functoriality_checks(f, g, samples=10, rng=random.Random(0), prefix="u")

        assert {record.id for record in records} == {"u.composite", "u.identity"}
        assert all(record.within_tolerance for record in records)
