"""
The category of retracts with its cartesian closed structure given by combinators

Products come from the pairing retract c -> (cT, cF), exponentials from
composition on both sides.
"""

from ..representation.products import pairing_witness
from ..terms import (
    TERMINAL,
    App,
    BetaEquality,
    F,
    Lam,
    T,
    Term,
    Var,
    after,
    apply,
)
from ..utils.mixins import CertifyingMixin
from .models import (
    BoundaryMismatchError,
    ExponentialObject,
    HomConditionError,
    Idempotent,
    NotIdempotentError,
    ProductObject,
    RetractMap,
)

TIDY_FUEL = 500


def product_term(e: Term, f: Term) -> Term:
    """λc. λx. x (e(cT)) (f(cF))"""
    return Lam(Lam(apply(Var(0), App(e, App(Var(1), T)), App(f, App(Var(1), F)))))


def fst_term(e: Term) -> Term:
    return Lam(App(e, App(Var(0), T)))


def snd_term(f: Term) -> Term:
    return Lam(App(f, App(Var(0), F)))


def exponential_term(e: Term, f: Term) -> Term:
    """λd. λz. f(d(ez))"""
    return Lam(Lam(App(f, App(Var(1), App(e, Var(0))))))


def eval_term(e: Term, f: Term) -> Term:
    """λc. f(cT(e(cF)))"""
    return Lam(App(f, App(App(Var(0), T), App(e, App(Var(0), F)))))


def curry_term(g: Term, e: Term, v: Term) -> Term:
    """λw. λy. v(λx. x(gw)(ey))"""
    return Lam(Lam(App(v, Lam(apply(Var(0), App(g, Var(2)), App(e, Var(1)))))))


class KaroubiCategory(CertifyingMixin):
    """Idempotents of the monoid of closed terms and maps between them

    Constructors certify idempotence and the hom condition when eager is set;
    only a definitive Distinct is rejected.
    """

    def __init__(self, equality: BetaEquality | None = None, eager: bool = True) -> None:
        self.equality = equality or BetaEquality()
        self.tidier = self.equality.with_fuel(TIDY_FUEL)
        self.eager = eager

    def tidy(self, t: Term) -> Term:
        return self.tidier.tidy(t)

    # Objects and maps

    def idempotent(
        self,
        term: Term,
        name: str,
        factors: tuple[Idempotent, Idempotent] | None = None,
    ) -> Idempotent:
        term = self.tidy(term)
        if self.eager:
            self.certify(
                self.equality.eq(after(term, term), term),
                NotIdempotentError,
                f"{name} is not idempotent",
                idempotent=name,
            )
        return Idempotent(name, term, factors)

    def hom(self, source: Idempotent, target: Idempotent, v: Term) -> RetractMap:
        v = self.tidy(v)
        if self.eager:
            conjugated = after(target.term, after(v, source.term))
            self.certify(
                self.equality.eq(conjugated, v),
                HomConditionError,
                f"f∘v∘e differs from v for a map {source} -> {target}",
                source=source.name,
                target=target.name,
            )
        return RetractMap(source, target, v)

    def restrict(self, source: Idempotent, target: Idempotent, u: Term) -> RetractMap:
        """f∘u∘e, always a map e -> f"""
        return self.hom(source, target, after(target.term, after(u, source.term)))

    def identity(self, e: Idempotent) -> RetractMap:
        return RetractMap(e, e, e.term)

    def same_object(self, e: Idempotent, f: Idempotent) -> bool:
        if e.term == f.term:
            return True
        verdict = self.equality.eq(e.term, f.term)
        return not verdict.is_distinct

    def compose_maps(self, g: RetractMap, v: RetractMap) -> RetractMap:
        """g∘v for v: e -> f and g: f -> h"""
        if v.target.term != g.source.term:
            self.certify(
                self.equality.eq(v.target.term, g.source.term),
                BoundaryMismatchError,
                f"cannot compose {v.target} -> ... with a map out of {g.source}",
            )
        return self.hom(v.source, g.target, after(g.v, v.v))

    # Cartesian closed structure

    def terminal(self) -> Idempotent:
        return self.idempotent(TERMINAL, "⊤")

    def to_terminal(self, e: Idempotent) -> RetractMap:
        return RetractMap(e, self.terminal(), TERMINAL)

    def product_object(self, e: Idempotent, f: Idempotent) -> ProductObject:
        obj = self.idempotent(product_term(e.term, f.term), f"({e}×{f})", (e, f))
        fst = self.hom(obj, e, fst_term(e.term))
        snd = self.hom(obj, f, snd_term(f.term))

        def pair(a: RetractMap, b: RetractMap) -> RetractMap:
            if not self.same_object(a.source, b.source):
                raise BoundaryMismatchError(
                    f"pairing maps out of {a.source} and {b.source}"
                )
            if not (self.same_object(a.target, e) and self.same_object(b.target, f)):
                raise BoundaryMismatchError(f"pairing needs maps into {e} and {f}")
            return self.hom(a.source, obj, pairing_witness(a.v, b.v))

        return ProductObject(obj, e, f, fst, snd, pair)

    def product_map(
        self, source: ProductObject, target: ProductObject, a: RetractMap, b: RetractMap
    ) -> RetractMap:
        """a × b = ⟨a∘fst, b∘snd⟩"""
        return target.pair(
            self.compose_maps(a, source.fst), self.compose_maps(b, source.snd)
        )

    def exponential_object(self, e: Idempotent, f: Idempotent) -> ExponentialObject:
        obj = self.idempotent(exponential_term(e.term, f.term), f"[{e}→{f}]")
        domain = self.product_object(obj, e)
        evaluation = self.hom(domain.object, f, eval_term(e.term, f.term))

        def curry(v: RetractMap) -> RetractMap:
            """v: g × e -> f becomes g -> f^e; v.source must be a product g × e"""
            if not self.same_object(v.target, f):
                raise BoundaryMismatchError(f"curry needs a map into {f}")
            if v.source.factors is None or not self.same_object(v.source.factors[1], e):
                raise BoundaryMismatchError(f"curry needs a map out of a product with {e}")
            g = v.source.factors[0]
            return self.hom(g, obj, curry_term(g.term, e.term, v.v))

        return ExponentialObject(obj, e, f, domain, evaluation, curry)

