"""
Endomorphism clones of small finite sets, stored as dense function tables
"""

import itertools
import random
from collections.abc import Iterator, Sequence
from functools import lru_cache
from typing import Any

import numpy as np

from ..terms.models import EqVerdict
from .interfaces import Theory
from .models import CloneArityError, FinMap, FiniteTheoryLimitError, TheoryElement

MAX_CARRIER = 4
MAX_ARITY = 3
ENUMERATION_LIMIT = 1 << 16

Table = tuple[int, ...]


def _digits(k: int, n: int) -> np.ndarray:
    """Row r holds the r-th input coordinate of every mixed-radix index"""
    indices = np.arange(k**n, dtype=np.int64)
    if n == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.stack([(indices // k ** (n - 1 - r)) % k for r in range(n)])


@lru_cache(maxsize=1 << 18)
def _compose_tables(k: int, table: Table, args: tuple[Table, ...], m: int) -> Table:
    size = k**m
    if not args:
        return (table[0],) * size
    index = np.zeros(size, dtype=np.int64)
    for arg in args:
        index = index * k + np.asarray(arg, dtype=np.int64)
    return tuple(np.asarray(table, dtype=np.int64)[index].tolist())


@lru_cache(maxsize=4096)
def _rename_table(k: int, table: Table, images: tuple[int, ...], m: int) -> Table:
    n = len(images)
    digits = _digits(k, m)
    index = np.zeros(k**m, dtype=np.int64)
    for i, image in enumerate(images):
        index = index + digits[image] * k ** (n - 1 - i)
    return tuple(np.asarray(table, dtype=np.int64)[index].tolist())


class FiniteEndoTheory(Theory):
    """T(n) = all functions X^n -> X for X = {0, ..., k-1}

    Inputs are indexed mixed-radix with the first argument most significant.
    """

    def __init__(self, k: int) -> None:
        if k < 1:
            raise FiniteTheoryLimitError("the carrier must be non-empty")
        if k > MAX_CARRIER:
            raise FiniteTheoryLimitError(f"carrier size {k} exceeds {MAX_CARRIER}")
        super().__init__(f"endo{k}")
        self.k = k

    @property
    def is_finite(self) -> bool:
        return True

    def cardinality(self, n: int) -> int:
        return self.k ** (self.k**n)

    def _check_arity(self, n: int) -> None:
        if not 0 <= n <= MAX_ARITY:
            raise FiniteTheoryLimitError(f"arity {n} outside 0..{MAX_ARITY}")

    def validate_payload(self, arity: int, payload: Any) -> None:
        self._check_arity(arity)
        if not isinstance(payload, tuple) or len(payload) != self.k**arity:
            raise CloneArityError(
                f"arity-{arity} table needs {self.k**arity} entries"
            )
        if any(not 0 <= value < self.k for value in payload):
            raise CloneArityError(f"table values must lie in 0..{self.k - 1}")

    def element_eq(self, a: TheoryElement, b: TheoryElement) -> EqVerdict:
        self.check_element(a)
        self.check_element(b, a.arity)
        return EqVerdict.equal(0) if a.payload == b.payload else EqVerdict.distinct(0)

    def proj(self, n: int, i: int) -> TheoryElement:
        self._check_arity(n)
        self.check_proj_index(n, i)
        table = tuple(_digits(self.k, n)[i].tolist())
        return TheoryElement(self.theory_id, n, table)

    def compose(
        self,
        t: TheoryElement,
        args: Sequence[TheoryElement],
        arity: int | None = None,
    ) -> TheoryElement:
        m = self.composite_arity(t, args, arity)
        self._check_arity(m)
        table = _compose_tables(
            self.k, t.payload, tuple(arg.payload for arg in args), m
        )
        return TheoryElement(self.theory_id, m, table)

    def rename(self, t: TheoryElement, f: FinMap) -> TheoryElement:
        self.check_element(t, f.source)
        self._check_arity(f.target)
        table = _rename_table(self.k, t.payload, f.images, f.target)
        return TheoryElement(self.theory_id, f.target, table)

    def enumerate(self, n: int) -> Iterator[TheoryElement]:
        self._check_arity(n)
        if self.cardinality(n) > ENUMERATION_LIMIT:
            raise FiniteTheoryLimitError(
                f"|T({n})| = {self.cardinality(n)} is too large to enumerate"
            )
        for table in itertools.product(range(self.k), repeat=self.k**n):
            yield TheoryElement(self.theory_id, n, table)

    def sample(self, n: int, rng: random.Random) -> TheoryElement:
        self._check_arity(n)
        table = tuple(rng.randrange(self.k) for _ in range(self.k**n))
        return TheoryElement(self.theory_id, n, table)

    def describe(self, e: TheoryElement) -> str:
        return f"T{e.arity}[{''.join(str(value) for value in e.payload)}]"

    def evaluate(self, e: TheoryElement, inputs: Sequence[int]) -> int:
        """Value of the table at one input tuple"""
        self.check_element(e, len(inputs))
        index = 0
        for value in inputs:
            index = index * self.k + value
        return int(e.payload[index])


def finite_endo_theory(k: int) -> FiniteEndoTheory:
    """The endomorphism clone of a k-element set"""
    return FiniteEndoTheory(k)
