"""
The comparison maps η: L -> U_{L(0)} and ε: U_A(0) -> A
"""

from dataclasses import dataclass, field

from ..algebras.models import Algebra, AlgebraElement, MembershipError
from ..algebras.monoid import retract_An
from ..algebras.presentation import closed_term_algebra
from ..clones.models import TheoryElement
from ..reporting import CheckRecord
from ..representation.endo_theory import EndoLambdaTheory, endo_lambda_theory
from ..semiclosed.initial import SyntacticLambdaTheory
from ..semiclosed.theory_maps import TheoryMap
from ..terms import App, I, Lam, Term, Var, apply
from ..utils.logger import get_logger

logger = get_logger(__name__)


def eta_target(theory: SyntacticLambdaTheory) -> EndoLambdaTheory:
    """U_{L(0)}, sharing L's equality"""
    return endo_lambda_theory(closed_term_algebra(theory))


def eta(
    theory: SyntacticLambdaTheory,
    a: TheoryElement,
    target: EndoLambdaTheory | None = None,
    certify: bool = True,
) -> TheoryElement:
    """a ∈ L(n) goes to λy. λⁿa, whose value on (c1..cn) is λy. a(c1 y, .., cn y)

    The stage variable y is vacuous. With certify set, membership in A(n+1)
    is checked and only a definite failure raises.
    """
    target = target or eta_target(theory)
    closed = theory.abstraction(a).payload
    representative = Lam(closed)
    if certify:
        retract_An(target.algebra, a.arity + 1).require(
            target.algebra.element(representative)
        )
    return TheoryElement(target.theory_id, a.arity, representative)


def eta_inverse(
    theory: SyntacticLambdaTheory, d: TheoryElement
) -> TheoryElement:
    """d ∈ U(n) goes to d I x0 .. x(n-1) in L(n); inverse to eta on global elements"""
    n = d.arity
    return theory.theory.element(n, apply(d.payload, I, *(Var(i) for i in range(n))))


def eta_map(
    theory: SyntacticLambdaTheory, target: EndoLambdaTheory | None = None
) -> TheoryMap:
    target = target or eta_target(theory)
    return TheoryMap(
        f"eta[{theory.theory_id}]",
        theory,
        target,
        lambda a: eta(theory, a, target, certify=False),
    )


def eta_inverse_map(
    theory: SyntacticLambdaTheory, source: EndoLambdaTheory | None = None
) -> TheoryMap:
    source = source or eta_target(theory)
    return TheoryMap(
        f"eta^-1[{theory.theory_id}]",
        source,
        theory,
        lambda d: eta_inverse(theory, d),
    )


def require_fixed_point(algebra: Algebra, a: AlgebraElement) -> AlgebraElement:
    """a = λx. aI, i.e. a is a global element of U_A; Unknown admits a"""
    fixed = algebra.element(Lam(App(a.representative, I)))
    algebra.certify(
        algebra.eq(fixed, a),
        MembershipError,
        f"{algebra.describe(a)} is not fixed by the monoid action",
    )
    return a


def eps(
    algebra: Algebra,
    a: AlgebraElement | TheoryElement,
    certify: bool = True,
) -> AlgebraElement:
    """ε(a) = aI for a fixed point a ∈ U_A(0); any other argument gives the same value"""
    element = a if isinstance(a, AlgebraElement) else algebra.element(a.payload)
    if certify:
        require_fixed_point(algebra, element)
    return algebra.element(App(element.representative, I))


def eps_inverse(algebra: Algebra, c: AlgebraElement) -> AlgebraElement:
    """c goes to the constant function λx. c"""
    algebra.check(c)
    return algebra.element(Lam(c.representative))


def global_element(
    theory: EndoLambdaTheory, c: AlgebraElement | Term
) -> TheoryElement:
    """λx. c as an element of U_A(0)"""
    term = c.representative if isinstance(c, AlgebraElement) else c
    return TheoryElement(theory.theory_id, 0, Lam(term))


@dataclass
class TheoryIsoWitness:
    """Forward and backward maps with the records certifying both round trips"""

    forward: TheoryMap
    backward: TheoryMap
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)
