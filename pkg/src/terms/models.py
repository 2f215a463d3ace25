"""
Term syntax, equality verdicts and reduction outcomes
"""

from dataclasses import dataclass, field
from enum import Enum


class TermError(Exception):
    """Base error for term construction and manipulation"""


class TermSyntaxError(TermError):
    """Raised when term text does not follow the grammar"""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class UnboundIdentifierError(TermSyntaxError):
    """Raised when a free identifier is not declared in the context"""


class ScopeError(TermError):
    """Raised when a term refers to a variable outside its context"""


class ArityMismatchError(TermError):
    """Raised when a substitution gets the wrong number of arguments"""


class UnknownCombinatorError(TermError, KeyError):
    """Raised for names outside the combinator table"""


class Term:
    """Base class of de Bruijn terms

    Nodes are immutable; hash and size are computed once at construction.
    A context variable x_i under d binders is written Var(d + i).
    """

    __slots__ = ()

    @property
    def size(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True, slots=True, eq=False)
class Var(Term):
    index: int
    _hash: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ScopeError(f"negative variable index {self.index}")
        object.__setattr__(self, "_hash", hash(("var", self.index)))

    @property
    def size(self) -> int:
        return 1

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Var) and other.index == self.index


@dataclass(frozen=True, slots=True, eq=False)
class App(Term):
    fun: Term
    arg: Term
    _hash: int = field(init=False, repr=False)
    _size: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(("app", hash(self.fun), hash(self.arg))))
        object.__setattr__(self, "_size", 1 + self.fun.size + self.arg.size)

    @property
    def size(self) -> int:
        return self._size

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, App) or other._hash != self._hash:
            return False
        return self.fun == other.fun and self.arg == other.arg


@dataclass(frozen=True, slots=True, eq=False)
class Lam(Term):
    body: Term
    _hash: int = field(init=False, repr=False)
    _size: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(("lam", hash(self.body))))
        object.__setattr__(self, "_size", 1 + self.body.size)

    @property
    def size(self) -> int:
        return self._size

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Lam) or other._hash != self._hash:
            return False
        return self.body == other.body


@dataclass(frozen=True, slots=True, eq=False)
class Const(Term):
    """Named constant; inert unless it carries a closed unfolding"""

    name: str
    unfolding: Term | None = None
    _hash: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_hash", hash(("const", self.name, hash(self.unfolding)))
        )

    @property
    def size(self) -> int:
        return 1

    @property
    def is_inert(self) -> bool:
        return self.unfolding is None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, Const)
            and other.name == self.name
            and other.unfolding == self.unfolding
        )


class Verdict(str, Enum):
    """Outcome of a fuel-bounded equality query"""

    EQUAL = "Equal"
    DISTINCT = "Distinct"
    UNKNOWN = "Unknown"


@dataclass(frozen=True, slots=True)
class EqVerdict:
    verdict: Verdict
    steps: int = 0

    @classmethod
    def equal(cls, steps: int = 0) -> "EqVerdict":
        return cls(Verdict.EQUAL, steps)

    @classmethod
    def distinct(cls, steps: int = 0) -> "EqVerdict":
        return cls(Verdict.DISTINCT, steps)

    @classmethod
    def unknown(cls, steps: int) -> "EqVerdict":
        return cls(Verdict.UNKNOWN, steps)

    @property
    def is_equal(self) -> bool:
        return self.verdict is Verdict.EQUAL

    @property
    def is_distinct(self) -> bool:
        return self.verdict is Verdict.DISTINCT

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def __str__(self) -> str:
        if self.is_unknown:
            return f"Unknown({self.steps})"
        return self.verdict.value


@dataclass(frozen=True, slots=True)
class NormalForm:
    term: Term
    steps: int


@dataclass(frozen=True, slots=True)
class FuelExhausted:
    partial: Term
    steps: int


NormalizeOutcome = NormalForm | FuelExhausted
