"""Test term syntax, substitution and the combinator table"""

import itertools
import random
from collections.abc import Iterator, Sequence
from typing import Any

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.terms import (
    ONE,
    PAIR,
    App,
    Const,
    F,
    I,
    Lam,
    ScopeError,
    T,
    Term,
    TermGenerator,
    TermSyntaxError,
    UnboundIdentifierError,
    UnknownCombinatorError,
    Var,
    after,
    apply,
    combinator,
    constants_of,
    context_names,
    instantiate,
    is_closed,
    lams,
    one_n,
    parse,
    print_term,
    rename,
    scope_of,
    shift,
    subst,
    substitute_constants,
)


class TestTermModels:
    """Test term nodes"""

    def test_structural_equality_and_hash(self) -> None:
        """Equal trees are equal and hash alike"""
        left = Lam(App(Var(0), Var(1)))
        right = Lam(App(Var(0), Var(1)))

        assert left == right
        assert hash(left) == hash(right)
        assert left != Lam(App(Var(1), Var(0)))

    def test_size_counts_nodes(self) -> None:
        """Size counts every node"""
        assert Var(3).size == 1
        assert I.size == 2
        assert App(I, I).size == 5

    def test_negative_index_rejected(self) -> None:
        """de Bruijn indices are non-negative"""
        with pytest.raises(ScopeError):
            Var(-1)

    def test_constants_compare_by_name_and_unfolding(self) -> None:
        """Constants with different unfoldings differ"""
        assert Const("c") == Const("c")
        assert Const("c", I) != Const("c")


class TestCombinators:
    """Test the combinator table and builders"""

    def test_one_n_shape(self) -> None:
        """𝟙_n = λx z1..zn. x z1..zn"""
        assert one_n(0) == I
        assert ONE == Lam(Lam(App(Var(1), Var(0))))
        assert one_n(2) == lams(3, apply(Var(2), Var(1), Var(0)))

    def test_booleans_and_pairing(self) -> None:
        """T, F and the pairing combinator"""
        assert T == Lam(Lam(Var(1)))
        assert F == Lam(Lam(Var(0)))
        assert PAIR == lams(3, apply(Var(0), Var(2), Var(1)))

    def test_after_is_monoid_composition(self) -> None:
        """after(a, b) = λx. a(bx)"""
        assert after(T, F) == Lam(App(T, App(F, Var(0))))

    def test_lookup(self) -> None:
        """Names resolve, indexed names build 𝟙_n"""
        assert combinator("K") == T
        assert combinator("app_3") == one_n(3)
        assert combinator("one_2") == one_n(2)

    def test_unknown_combinator(self) -> None:
        """Unknown names raise"""
        with pytest.raises(UnknownCombinatorError):
            combinator("nope")
        with pytest.raises(UnknownCombinatorError):
            combinator("app_99")

    def test_negative_one_n(self) -> None:
        """𝟙_n needs n >= 0"""
        with pytest.raises(ValueError):
            one_n(-1)


class TestSyntax:
    """Test parsing and printing"""

    def test_parse_identity(self) -> None:
        """Backslash and λ both introduce binders"""
        assert parse("\\x.x") == I
        assert parse("λx.x") == I
        assert parse("\\x y. x") == T

    def test_context_resolution(self) -> None:
        """Free identifiers resolve left to right against the context"""
        assert parse("x y", ["x", "y"]) == App(Var(0), Var(1))
        assert parse("\\z. z y", ["x", "y"]) == Lam(App(Var(0), Var(2)))

    def test_binder_shadows_context(self) -> None:
        """Binders shadow context names"""
        assert parse("\\x. x", ["x"]) == I

    def test_application_is_left_associative(self) -> None:
        """a b c = (a b) c"""
        assert parse("a b c", ["a", "b", "c"]) == apply(Var(0), Var(1), Var(2))
        assert parse("a (b c)", ["a", "b", "c"]) == App(Var(0), App(Var(1), Var(2)))

    def test_constants(self) -> None:
        """#name uses the given table, then the combinator table"""
        assert parse("#T") == Const("T", T)
        assert parse("#c") == Const("c")
        assert parse("#c", constants={"c": F}) == Const("c", F)

    def test_unbound_identifier(self) -> None:
        """Undeclared free identifiers are an error with a position"""
        with pytest.raises(UnboundIdentifierError) as excinfo:
            parse("\\x. x z")

        assert excinfo.value.position == 6

    def test_syntax_errors(self) -> None:
        """Unbalanced parentheses and dangling binders are rejected"""
        for text in ("(\\x.x", "\\x.", "x )", ""):
            with pytest.raises(TermSyntaxError):
                parse(text, ["x"])

    def test_print(self) -> None:
        """Binders get fresh names avoiding the context"""
        assert print_term(I) == "\\x. x"
        assert print_term(T) == "\\x.\\y. x"
        assert print_term(App(Var(0), Var(1)), ["a", "b"]) == "a b"
        assert print_term(Lam(App(Var(1), Var(0))), ["x"]) == "\\y. x y"

    def test_print_parenthesizes_arguments(self) -> None:
        """Nested applications and abstractions in argument position get parentheses"""
        term = apply(Var(0), App(Var(1), Var(0)), I)
        assert print_term(term, ["a", "b"]) == "a (b a) (\\x. x)"

    def test_print_out_of_context(self) -> None:
        """A free variable without a name is a scope error"""
        with pytest.raises(ScopeError):
            print_term(Var(0))

    def test_print_then_parse(self) -> None:
        """Printed terms parse back to themselves"""
        term = Lam(apply(Var(0), Var(1), Lam(App(Var(0), Var(2)))))
        names = ["a", "b"]
        assert parse(print_term(term, names), names) == term

    def test_context_names(self) -> None:
        """Default names are x0 .. x(n-1)"""
        assert context_names(3) == ["x0", "x1", "x2"]


class TestSubstitution:
    """Test shifting, substitution and renaming"""

    def test_shift(self) -> None:
        """Only free indices move"""
        assert shift(Var(0), 1) == Var(1)
        assert shift(I, 5) == I
        assert shift(Lam(Var(1)), 2) == Lam(Var(3))

    def test_subst_simultaneous(self) -> None:
        """All context variables are replaced at once"""
        term = App(Var(0), Var(1))
        assert subst(term, [Var(1), Var(0)]) == App(Var(1), Var(0))
        assert subst(term, [I, T]) == App(I, T)

    def test_subst_under_binder(self) -> None:
        """Arguments are shifted under binders"""
        term = Lam(App(Var(0), Var(1)))
        assert subst(term, [Var(0)]) == Lam(App(Var(0), Var(1)))

    def test_subst_scope(self) -> None:
        """Variables beyond the argument list are an error"""
        with pytest.raises(ScopeError):
            subst(Var(2), [I])

    def test_rename(self) -> None:
        """x_i goes to x_images[i]"""
        assert rename(App(Var(0), Var(1)), [1, 0]) == App(Var(1), Var(0))
        assert rename(Lam(Var(1)), [2]) == Lam(Var(3))

    def test_instantiate(self) -> None:
        """Contracting (λ.body) v"""
        assert instantiate(App(Var(0), Var(1)), T) == App(T, Var(0))

    def test_scope_and_closedness(self) -> None:
        """scope_of is the least context size"""
        assert scope_of(I) == 0
        assert scope_of(Lam(Var(2))) == 2
        assert is_closed(T)
        assert not is_closed(Var(0))

    def test_constants(self) -> None:
        """Constants are found and replaced"""
        term = App(Const("a"), Lam(Const("b")))

        assert constants_of(term) == {"a", "b"}
        assert substitute_constants(term, {"a": I}) == App(I, Lam(Const("b")))


seeds = st.integers(min_value=0, max_value=2**32 - 1)

NamedTerm = tuple[Any, ...]


def names(prefix: str) -> Iterator[str]:
    return (f"{prefix}{i}" for i in itertools.count())


def to_named(
    t: Term, context: Sequence[str], binders_from: Iterator[str], binders: tuple[str, ...] = ()
) -> NamedTerm:
    """The same term with every binder given a name from binders_from"""
    match t:
        case Var(index):
            if index < len(binders):
                return ("var", binders[-1 - index])
            return ("var", context[index - len(binders)])
        case App(fun, arg):
            return (
                "app",
                to_named(fun, context, binders_from, binders),
                to_named(arg, context, binders_from, binders),
            )
        case Lam(body):
            name = next(binders_from)
            return ("lam", name, to_named(body, context, binders_from, (*binders, name)))
        case _:
            return ("const", t)


def free_names(t: NamedTerm) -> set[str]:
    match t[0]:
        case "var":
            return {t[1]}
        case "app":
            return free_names(t[1]) | free_names(t[2])
        case "lam":
            return free_names(t[2]) - {t[1]}
        case _:
            return set()


def named_subst(t: NamedTerm, mapping: dict[str, NamedTerm], fresh: Iterator[str]) -> NamedTerm:
    """Capture-avoiding substitution on named terms, renaming binders on demand"""
    match t[0]:
        case "var":
            return mapping.get(t[1], t)
        case "app":
            return ("app", named_subst(t[1], mapping, fresh), named_subst(t[2], mapping, fresh))
        case "lam":
            _, name, body = t
            inner = {k: v for k, v in mapping.items() if k != name}
            used = free_names(body)
            if any(name in free_names(v) for k, v in inner.items() if k in used):
                renamed = next(fresh)
                body = named_subst(body, {name: ("var", renamed)}, fresh)
                name = renamed
            return ("lam", name, named_subst(body, inner, fresh))
        case _:
            return t


def from_named(t: NamedTerm, context: Sequence[str], binders: tuple[str, ...] = ()) -> Term:
    match t[0]:
        case "var":
            for distance, binder in enumerate(reversed(binders)):
                if binder == t[1]:
                    return Var(distance)
            return Var(len(binders) + list(context).index(t[1]))
        case "app":
            return App(from_named(t[1], context, binders), from_named(t[2], context, binders))
        case "lam":
            return Lam(from_named(t[2], context, (*binders, t[1])))
        case _:
            return t[1]


class TestSubstitutionProperties:
    """Test substitution and printing on random terms"""

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_matches_nameful_substitution(self, seed: int) -> None:
        """subst agrees with capture-avoiding substitution on named terms"""
        rng = random.Random(seed)
        generator = TermGenerator(rng, 12, [Const("c")])
        for _ in range(10):
            n, m = rng.randint(0, 3), rng.randint(0, 3)
            t = generator.term(n)
            args = [generator.term(m) for _ in range(n)]
            xs, ys = context_names(n, "x"), context_names(m, "y")
            # binders of t reuse the argument names so that capture must be avoided
            named = to_named(t, xs, names("y"))
            images = {x: to_named(a, ys, names("b")) for x, a in zip(xs, args, strict=True)}

            expected = from_named(named_subst(named, images, names("f")), ys)

            assert subst(t, args, n) == expected

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_substitutions_compose(self, seed: int) -> None:
        """t[u][v] = t[u[v]], projections are a unit, renaming is substitution"""
        rng = random.Random(seed)
        generator = TermGenerator(rng, 10)
        n, m, k = rng.randint(0, 3), rng.randint(1, 3), rng.randint(0, 3)
        t = generator.term(n)
        us = [generator.term(m) for _ in range(n)]
        vs = [generator.term(k) for _ in range(m)]

        assert subst(subst(t, us), vs) == subst(t, [subst(u, vs) for u in us])
        assert subst(t, [Var(i) for i in range(n)]) == t

        images = [rng.randrange(m) for _ in range(n)]
        assert rename(t, images) == subst(t, [Var(i) for i in images])

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds)
    def test_print_parse_round_trip(self, seed: int) -> None:
        """parse(print(t)) = t in any context"""
        rng = random.Random(seed)
        n = rng.randint(0, 3)
        t = TermGenerator(rng, 20, [Const("c")]).term(n)
        context = context_names(n)

        assert parse(print_term(t, context), context) == t
