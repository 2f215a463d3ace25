"""
Objects and maps of the category of retracts of the monoid of closed terms
"""

from collections.abc import Callable
from dataclasses import dataclass

from ..terms import Term, print_term


class KaroubiError(Exception):
    """Base error for the category of retracts"""


class NotIdempotentError(KaroubiError):
    """Raised when e∘e is definitely different from e"""


class HomConditionError(KaroubiError):
    """Raised when f∘v∘e is definitely different from v"""


class BoundaryMismatchError(KaroubiError):
    """Raised when composing maps whose shared boundary differs"""


@dataclass(frozen=True)
class Idempotent:
    """An object: a closed term e with e∘e = e

    Product objects remember their factors so maps out of them can be curried.
    """

    name: str
    term: Term
    factors: tuple["Idempotent", "Idempotent"] | None = None

    def __str__(self) -> str:
        return self.name

    @property
    def printed(self) -> str:
        return print_term(self.term)


@dataclass(frozen=True)
class RetractMap:
    """v: e -> f with f∘v∘e = v; an idempotent is its own identity"""

    source: Idempotent
    target: Idempotent
    v: Term

    def __str__(self) -> str:
        return f"{print_term(self.v)} : {self.source} -> {self.target}"


@dataclass(frozen=True)
class ProductObject:
    """e × f with its projections and the pairing of maps into it"""

    object: Idempotent
    left: Idempotent
    right: Idempotent
    fst: RetractMap
    snd: RetractMap
    pair: Callable[[RetractMap, RetractMap], RetractMap]


@dataclass(frozen=True)
class ExponentialObject:
    """f^e with evaluation and currying

    domain is the product f^e × e that eval leaves from.
    """

    object: Idempotent
    source: Idempotent
    target: Idempotent
    domain: ProductObject
    eval: RetractMap
    curry: Callable[[RetractMap], RetractMap]
