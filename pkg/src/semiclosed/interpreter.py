"""
Interpretation of λ-syntax in an arbitrary λ-theory
"""

from ..clones.models import CloneArityError, TheoryElement
from ..terms import App, Const, Lam, Term, Var, scope_of
from ..terms import rename as rename_term
from .models import LambdaTheory


def interpret(t: Term, n: int, theory: LambdaTheory) -> TheoryElement:
    """⟦t⟧ in L(n) for a term t in context n

    Variables go to projections, application to app and abstraction to lam.
    """
    if scope_of(t) > n:
        raise CloneArityError(f"term needs context {scope_of(t)}, got {n}")
    return _interpret(t, n, theory)


def _interpret(t: Term, n: int, theory: LambdaTheory) -> TheoryElement:
    match t:
        case Var(index):
            return theory.proj(n, index)
        case App(fun, arg):
            return theory.compose(
                theory.app,
                [_interpret(fun, n, theory), _interpret(arg, n, theory)],
                n,
            )
        case Lam(body):
            # The bound variable becomes the last context slot x_n.
            opened = rename_term(body, [n, *range(n)])
            return theory.lam(_interpret(opened, n + 1, theory))
        case Const():
            return theory.weaken(theory.interpret_constant(t), n)
        case _:
            raise TypeError(f"not a term: {t!r}")
