"""
Standard algebras and the JSON presentation format

    {"name": "...", "constants": [{"name": "c", "unfolding": "\\x. x"}, ...]}

An unfolding may mention constants declared before it; a missing unfolding
makes the constant inert.
"""

from pathlib import Path

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..semiclosed.initial import SyntacticLambdaTheory
from ..terms import BetaEquality, Term, TermError, combinator, is_closed, parse
from ..terms.syntax import IDENTIFIER
from ..utils.logger import get_logger
from .models import Algebra, PresentationError

logger = get_logger(__name__)

STANDARD_GENERATORS = ("I", "T", "F", "one", "p", "q", "pair", "B", "S")


def standard_generators() -> dict[str, Term | None]:
    """Named closed combinators shared by Λ(0) and the open-term algebras"""
    return {name: combinator(name) for name in STANDARD_GENERATORS}


class ConstantSpec(BaseModel):
    name: str = Field(..., min_length=1)
    unfolding: str | None = None

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        if IDENTIFIER.fullmatch(v) is None:
            raise ValueError(f"constant name {v!r} is not an identifier")
        return v


class AlgebraPresentation(BaseModel):
    name: str = Field(..., min_length=1)
    constants: list[ConstantSpec] = Field(default_factory=list)

    @field_validator("constants")
    @classmethod
    def validate_unique(cls, v: list[ConstantSpec]) -> list[ConstantSpec]:
        names = [entry.name for entry in v]
        if len(names) != len(set(names)):
            raise ValueError("constant names must be unique")
        return v

    def to_algebra(self, equality: BetaEquality | None = None) -> Algebra:
        table: dict[str, Term | None] = {}
        for entry in self.constants:
            if entry.unfolding is None:
                table[entry.name] = None
                continue
            try:
                unfolding = parse(entry.unfolding, (), table)
            except TermError as e:
                raise PresentationError(f"constant #{entry.name}: {e}") from e
            if not is_closed(unfolding):
                raise PresentationError(f"unfolding of #{entry.name} is not closed")
            table[entry.name] = unfolding
        return Algebra(self.name, table, equality)


def load_presentation(path: Path, equality: BetaEquality | None = None) -> Algebra:
    """Read an algebra presentation from a JSON file"""
    try:
        presentation = AlgebraPresentation.model_validate_json(
            path.read_text(encoding="utf-8")
        )
    except OSError as e:
        raise PresentationError(f"cannot read {path}: {e}") from e
    except ValidationError as e:
        raise PresentationError(f"invalid presentation {path}: {e}") from e
    algebra = presentation.to_algebra(equality)
    logger.info(
        "Algebra presentation loaded",
        name=algebra.name,
        constants=len(algebra.constant_table),
    )
    return algebra


def closed_term_algebra(
    theory: SyntacticLambdaTheory | None = None,
    equality: BetaEquality | None = None,
) -> Algebra:
    """L(0) as a Λ-algebra, by default the closed terms Λ(0)"""
    constants = standard_generators()
    name = "lambda(0)"
    if theory is not None:
        constants.update(theory.theory.constants)
        name = f"{theory.theory_id}(0)"
        equality = equality or theory.equality
    return Algebra(name, constants, equality)


def open_term_algebra(p: int, equality: BetaEquality | None = None) -> Algebra:
    """Λ(p) as an algebra: inert constants v0 .. v{p-1} stand for indeterminates"""
    if p < 0:
        raise PresentationError("number of indeterminates must be non-negative")
    constants = standard_generators()
    constants.update({f"v{j}": None for j in range(p)})
    return Algebra(f"lambda({p})", constants, equality)


def trivial_algebra() -> Algebra:
    """The one-point algebra; every equation holds by decree"""
    return Algebra("trivial", trivial=True)
