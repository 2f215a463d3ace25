"""
Abstract algebraic theories (clones) and the presentation protocol they consume
"""

import random
from abc import ABC, abstractmethod
from collections.abc import Iterator, Mapping, Sequence
from typing import Any, Protocol, runtime_checkable

from ..terms.models import EqVerdict, Term
from ..utils.mixins import LoggerMixin
from .models import CloneArityError, FinMap, TheoryElement, TheoryMismatchError


@runtime_checkable
class ConstantPresentation(Protocol):
    """Anything that presents elements as closed terms over named constants"""

    @property
    def name(self) -> str: ...

    @property
    def constant_table(self) -> Mapping[str, Term | None]: ...

    @property
    def term_presented(self) -> bool: ...


class Theory(ABC, LoggerMixin):
    """Arity-indexed sets T(n) with projections and substitution-style composition

    Elements carry the theory id; mixing theories is a hard error.
    """

    def __init__(self, theory_id: str) -> None:
        self.theory_id = theory_id

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.theory_id!r})"

    @property
    def is_finite(self) -> bool:
        return False

    def element(self, arity: int, payload: Any) -> TheoryElement:
        if arity < 0:
            raise CloneArityError(f"negative arity {arity}")
        self.validate_payload(arity, payload)
        return TheoryElement(self.theory_id, arity, payload)

    def validate_payload(self, arity: int, payload: Any) -> None:
        """Raise when payload is not well-formed at arity"""

    def check_element(self, e: TheoryElement, arity: int | None = None) -> None:
        if e.theory_id != self.theory_id:
            raise TheoryMismatchError(
                f"element of {e.theory_id!r} used in {self.theory_id!r}"
            )
        if arity is not None and e.arity != arity:
            raise CloneArityError(f"expected arity {arity}, got {e.arity}")

    def composite_arity(
        self, t: TheoryElement, args: Sequence[TheoryElement], arity: int | None
    ) -> int:
        """Validate compose inputs and return the arity of the result"""
        self.check_element(t)
        if len(args) != t.arity:
            raise CloneArityError(
                f"arity-{t.arity} element composed with {len(args)} arguments"
            )
        if not args:
            return 0 if arity is None else arity
        m = args[0].arity
        for arg in args:
            self.check_element(arg, m)
        if arity is not None and arity != m:
            raise CloneArityError(f"arguments have arity {m}, requested {arity}")
        return m

    @abstractmethod
    def element_eq(self, a: TheoryElement, b: TheoryElement) -> EqVerdict:
        pass

    @abstractmethod
    def proj(self, n: int, i: int) -> TheoryElement:
        pass

    @abstractmethod
    def compose(
        self,
        t: TheoryElement,
        args: Sequence[TheoryElement],
        arity: int | None = None,
    ) -> TheoryElement:
        """Clone composition T(n) x T(m)^n -> T(m)

        arity is only consulted when t is a constant (n = 0).
        """

    def identity(self) -> TheoryElement:
        return self.proj(1, 0)

    def projections(self, n: int) -> list[TheoryElement]:
        return [self.proj(n, i) for i in range(n)]

    def rename_by_formula(self, t: TheoryElement, f: FinMap) -> TheoryElement:
        if f.source != t.arity:
            raise CloneArityError(f"map from {f.source} cannot rename arity {t.arity}")
        return self.compose(t, [self.proj(f.target, f(i)) for i in range(t.arity)], f.target)

    def rename(self, t: TheoryElement, f: FinMap) -> TheoryElement:
        """Action of a finite map; must agree with rename_by_formula"""
        return self.rename_by_formula(t, f)

    def weaken(self, t: TheoryElement, m: int) -> TheoryElement:
        """Reindex t into arity m along the inclusion of the first t.arity slots"""
        return self.rename(t, FinMap.inclusion(t.arity, m))

    def check_proj_index(self, n: int, i: int) -> None:
        if not 0 <= i < n:
            raise CloneArityError(f"projection index {i} out of range for arity {n}")

    def enumerate(self, n: int) -> Iterator[TheoryElement]:
        raise NotImplementedError(f"{self.theory_id} is not enumerable")

    @abstractmethod
    def sample(self, n: int, rng: random.Random) -> TheoryElement:
        pass

    @abstractmethod
    def describe(self, e: TheoryElement) -> str:
        pass
