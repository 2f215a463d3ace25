"""
Normal-order reduction, normalization and fuel-bounded beta-equality
"""

import sys
from dataclasses import dataclass
from functools import lru_cache

from ..utils.logger import get_logger
from .models import (
    App,
    Const,
    EqVerdict,
    FuelExhausted,
    Lam,
    NormalForm,
    NormalizeOutcome,
    Term,
    TermError,
    Var,
)
from .substitution import instantiate, occurs_free, shift

logger = get_logger(__name__)

# Terms are walked recursively; reducts may nest deeper than the default limit.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))

DEFAULT_FUEL = 10_000
DEFAULT_MAX_SIZE = 5_000


def unwind(t: Term) -> tuple[Term, list[Term]]:
    """Split an application spine into its head and arguments"""
    args: list[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


def rewind(head: Term, args: list[Term]) -> Term:
    for arg in args:
        head = App(head, arg)
    return head


def _eta_contract(t: Lam) -> Term | None:
    body = t.body
    if isinstance(body, App) and body.arg == Var(0) and not occurs_free(body.fun, 0):
        return shift(body.fun, -1)
    return None


def beta_step(t: Term, eta: bool = False) -> Term | None:
    """Contract the leftmost-outermost redex, or None when t is normal

    A constant with an unfolding is unfolded only as the head of an
    application spine, and only when no beta-redex sits at or above it.
    """
    match t:
        case App():
            head, args = unwind(t)
            if isinstance(head, Lam):
                return rewind(instantiate(head.body, args[0]), args[1:])
            if isinstance(head, Const) and head.unfolding is not None:
                return rewind(head.unfolding, args)
            for position, arg in enumerate(args):
                reduced = beta_step(arg, eta)
                if reduced is not None:
                    new_args = list(args)
                    new_args[position] = reduced
                    return rewind(head, new_args)
            return None
        case Lam(body):
            if eta:
                contracted = _eta_contract(t)
                if contracted is not None:
                    return contracted
            reduced = beta_step(body, eta)
            return Lam(reduced) if reduced is not None else None
        case _:
            return None


def normalize(
    t: Term,
    fuel: int = DEFAULT_FUEL,
    eta: bool = False,
    max_size: int = DEFAULT_MAX_SIZE,
) -> NormalizeOutcome:
    """Iterate beta_step at most fuel times"""
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    steps = 0
    current = t
    while steps < fuel:
        if current.size > max_size:
            logger.debug("Term outgrew size ceiling", size=current.size, steps=steps)
            return FuelExhausted(current, steps)
        reduced = beta_step(current, eta)
        if reduced is None:
            return NormalForm(current, steps)
        current = reduced
        steps += 1
    if beta_step(current, eta) is None:
        return NormalForm(current, steps)
    return FuelExhausted(current, steps)


@lru_cache(maxsize=4096)
def _expanded_unfolding(unfolding: Term) -> Term:
    return expand_constants(unfolding)


def expand_constants(t: Term) -> Term:
    """Replace every constant that has an unfolding by its (expanded) unfolding"""
    match t:
        case Const(unfolding=None):
            return t
        case Const(unfolding=unfolding):
            try:
                return _expanded_unfolding(unfolding)
            except RecursionError as exc:
                raise TermError(f"cyclic unfolding of #{t.name}") from exc
        case App(fun, arg):
            new_fun, new_arg = expand_constants(fun), expand_constants(arg)
            if new_fun is fun and new_arg is arg:
                return t
            return App(new_fun, new_arg)
        case Lam(body):
            new_body = expand_constants(body)
            return t if new_body is body else Lam(new_body)
        case _:
            return t


class _Trace:
    """One side of a lock-step comparison"""

    __slots__ = ("current", "seen", "finished", "overflow")

    def __init__(self, start: Term) -> None:
        self.current = start
        self.seen = {start}
        self.finished = False
        self.overflow = False

    @property
    def stuck(self) -> bool:
        return self.finished or self.overflow

    def advance(self, eta: bool, max_size: int) -> bool:
        """Take one step; False when no step was taken"""
        if self.finished or self.overflow:
            return False
        if self.current.size > max_size:
            self.overflow = True
            return False
        reduced = beta_step(self.current, eta)
        if reduced is None:
            self.finished = True
            return False
        self.current = reduced
        self.seen.add(reduced)
        return True


def beta_eq(
    t: Term,
    u: Term,
    fuel: int = DEFAULT_FUEL,
    eta: bool = False,
    max_size: int = DEFAULT_MAX_SIZE,
) -> EqVerdict:
    """Compare two terms by reducing both in lock step with shared fuel

    Equal as soon as the two reduction sequences share a term; Distinct when
    both reach different normal forms; Unknown when fuel runs out.
    """
    left = _Trace(expand_constants(t))
    right = _Trace(expand_constants(u))
    steps = 0
    while True:
        if left.current in right.seen or right.current in left.seen:
            return EqVerdict.equal(steps)
        if left.finished and right.finished:
            return EqVerdict.distinct(steps)
        if left.stuck and right.stuck:
            break
        if steps >= fuel:
            break
        if left.advance(eta, max_size):
            steps += 1
        if steps < fuel and right.advance(eta, max_size):
            steps += 1
    logger.debug("Equality query inconclusive", steps=steps, fuel=fuel)
    return EqVerdict.unknown(steps)


@dataclass(frozen=True)
class BetaEquality:
    """Reduction parameters shared by theories, algebras and suites"""

    fuel: int = DEFAULT_FUEL
    eta: bool = False
    max_size: int = DEFAULT_MAX_SIZE

    def __post_init__(self) -> None:
        if self.fuel <= 0:
            raise ValueError("fuel must be positive")

    def eq(self, t: Term, u: Term) -> EqVerdict:
        return beta_eq(t, u, self.fuel, self.eta, self.max_size)

    def normalize(self, t: Term) -> NormalizeOutcome:
        return normalize(t, self.fuel, self.eta, self.max_size)

    def tidy(self, t: Term) -> Term:
        """Normal form of t when one is reached within fuel, else t itself"""
        outcome = self.normalize(t)
        return outcome.term if isinstance(outcome, NormalForm) else t

    def with_fuel(self, fuel: int) -> "BetaEquality":
        return BetaEquality(fuel, self.eta, self.max_size)
