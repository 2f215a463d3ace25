"""
Data models for abstract clones: elements, finite maps and law reports
"""

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any, Literal

from pydantic import BaseModel, Field

from ..terms.models import ArityMismatchError, Verdict


class TheoryError(Exception):
    """Base error for algebraic theories"""


class TheoryMismatchError(TheoryError):
    """Raised when elements of different theories are combined"""


class CloneArityError(TheoryError, ArityMismatchError):
    """Raised when arities do not fit a clone operation"""


class FiniteTheoryLimitError(TheoryError):
    """Raised when a finite theory would exceed its size caps"""


@dataclass(frozen=True, slots=True)
class TheoryElement:
    """Arity-tagged element of a theory; payload is a Term or a function table"""

    theory_id: str
    arity: int
    payload: Any


@dataclass(frozen=True, slots=True)
class FinMap:
    """A map {0..source-1} -> {0..target-1} of the skeleton of finite sets"""

    source: int
    target: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.source < 0 or self.target < 0:
            raise CloneArityError("finite sets have non-negative size")
        if len(self.images) != self.source:
            raise CloneArityError(
                f"map from {self.source} needs {self.source} images, "
                f"got {len(self.images)}"
            )
        if any(not 0 <= image < self.target for image in self.images):
            raise CloneArityError(f"images {self.images} not below {self.target}")

    def __call__(self, i: int) -> int:
        return self.images[i]

    @classmethod
    def identity(cls, n: int) -> "FinMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def inclusion(cls, n: int, m: int, offset: int = 0) -> "FinMap":
        """i -> offset + i, the block embedding of n into m"""
        return cls(n, m, tuple(offset + i for i in range(n)))

    def then(self, other: "FinMap") -> "FinMap":
        """Diagrammatic composite: first self, then other"""
        if other.source != self.target:
            raise CloneArityError("finite maps do not compose")
        return FinMap(self.source, other.target, tuple(other(i) for i in self.images))

    @classmethod
    def all_maps(cls, n: int, m: int) -> Iterator["FinMap"]:
        for images in itertools.product(range(m), repeat=n):
            yield cls(n, m, images)


LawName = Literal[
    "unit_right",
    "unit_left",
    "projection",
    "associativity",
    "rename_naturality",
    "rename_formula",
]

LAWS: tuple[LawName, ...] = (
    "unit_right",
    "unit_left",
    "projection",
    "associativity",
    "rename_naturality",
    "rename_formula",
)


class LawTally(BaseModel):
    """Counts of checked instances for one law"""

    passed: int = Field(default=0, ge=0)
    failed: int = Field(default=0, ge=0)
    inconclusive: int = Field(default=0, ge=0)

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.inconclusive


class LawInstance(BaseModel):
    """One law instance that did not come back Equal"""

    law: LawName
    instance: list[str] = Field(..., description="Printed terms or tables")
    verdict: Verdict
    steps: int = Field(default=0, ge=0)


class LawReport(BaseModel):
    """Outcome of running the clone-law harness on one theory"""

    theory_id: str
    mode: Literal["sampled", "exhaustive"]
    max_arity: int
    laws: dict[str, LawTally] = Field(default_factory=dict)
    failures: list[LawInstance] = Field(default_factory=list)
    inconclusive: list[LawInstance] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(tally.failed == 0 for tally in self.laws.values())

    @property
    def failure_count(self) -> int:
        return sum(tally.failed for tally in self.laws.values())

    @property
    def inconclusive_count(self) -> int:
        return sum(tally.inconclusive for tally in self.laws.values())

    @property
    def instance_count(self) -> int:
        return sum(tally.total for tally in self.laws.values())
