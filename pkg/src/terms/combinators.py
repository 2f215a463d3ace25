"""
The fixed table of closed combinators and small term builders
"""

import re
from collections.abc import Callable

from .models import App, Lam, Term, UnknownCombinatorError, Var


def lams(count: int, body: Term) -> Term:
    """Wrap body in count binders"""
    for _ in range(count):
        body = Lam(body)
    return body


def apply(head: Term, *args: Term) -> Term:
    """Left-associated application head a1 ... an"""
    for arg in args:
        head = App(head, arg)
    return head


def after(a: Term, b: Term) -> Term:
    """Monoid composition of closed terms: λx. a(bx)"""
    return Lam(App(a, App(b, Var(0))))


def application_chain(n: int) -> Term:
    """app_n in context n+1: x_0 x_1 ... x_n"""
    if n < 0:
        raise ValueError("app_n needs n >= 0")
    return apply(Var(0), *(Var(i) for i in range(1, n + 1)))


def one_n(n: int) -> Term:
    """𝟙_n = λx z1 ... zn. x z1 ... zn, the closure of app_n"""
    if n < 0:
        raise ValueError("𝟙_n needs n >= 0")
    return lams(n + 1, apply(Var(n), *(Var(n - 1 - j) for j in range(n))))


I = Lam(Var(0))
T = Lam(Lam(Var(1)))
F = Lam(Lam(Var(0)))
ONE = one_n(1)
P = Lam(App(Var(0), T))
Q = Lam(App(Var(0), F))
PAIR = lams(3, apply(Var(0), Var(2), Var(1)))
B = lams(3, App(Var(2), App(Var(1), Var(0))))
S = lams(3, apply(Var(2), Var(0), App(Var(1), Var(0))))
_SELF = Lam(App(Var(0), Var(0)))
OMEGA = App(_SELF, _SELF)
_TURING = Lam(Lam(App(Var(0), apply(Var(1), Var(1), Var(0)))))
THETA = App(_TURING, _TURING)
TERMINAL = Lam(I)

_TABLE: dict[str, Term] = {
    "I": I,
    "T": T,
    "K": T,
    "F": F,
    "app": ONE,
    "one": ONE,
    "p": P,
    "q": Q,
    "pair": PAIR,
    "B": B,
    "S": S,
    "Omega": OMEGA,
    "Theta": THETA,
}

_INDEXED: dict[str, Callable[[int], Term]] = {"app": one_n, "one": one_n}
_INDEXED_NAME = re.compile(r"^(app|one)_(\d+)$")
MAX_INDEXED = 16


def combinator(name: str) -> Term:
    """Look up a closed combinator; app_n and one_n both give 𝟙_n"""
    if name in _TABLE:
        return _TABLE[name]
    match = _INDEXED_NAME.match(name)
    if match is not None:
        n = int(match.group(2))
        if n <= MAX_INDEXED:
            return _INDEXED[match.group(1)](n)
    raise UnknownCombinatorError(f"unknown combinator {name!r}")


def is_combinator(name: str) -> bool:
    try:
        combinator(name)
    except UnknownCombinatorError:
        return False
    return True


def combinator_names() -> list[str]:
    return sorted(_TABLE)
