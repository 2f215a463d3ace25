"""
Report models shared by every check and suite
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..terms.models import Verdict

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2
EXIT_REFUTED = 3


class CheckRecord(BaseModel):
    """One checked identity, possibly aggregated over many instances"""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., min_length=1)
    identity: str
    verdict: Verdict
    steps: int = Field(default=0, ge=0)
    terms: list[str] = Field(default_factory=list)
    detail: str | None = None
    instances: int = Field(default=1, ge=1)
    unknown_instances: int = Field(default=0, ge=0)
    tolerance: float = Field(default=0.0, ge=0.0, le=1.0)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.EQUAL

    @property
    def within_tolerance(self) -> bool:
        """Equal, or Unknown on no more than the tolerated share of instances"""
        if self.verdict is Verdict.UNKNOWN:
            return self.unknown_instances <= self.tolerance * self.instances
        return self.passed


class Summary(BaseModel):
    """Verdict tallies over the records of a report"""

    equal: int = Field(default=0, ge=0)
    distinct: int = Field(default=0, ge=0)
    unknown: int = Field(default=0, ge=0)

    @classmethod
    def of(cls, records: list[CheckRecord]) -> "Summary":
        return cls(
            equal=sum(r.verdict is Verdict.EQUAL for r in records),
            distinct=sum(r.verdict is Verdict.DISTINCT for r in records),
            unknown=sum(r.verdict is Verdict.UNKNOWN for r in records),
        )


class SuiteReport(BaseModel):
    """Deterministic result of one suite run"""

    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    suite: str
    seed: int
    fuel: int = Field(..., gt=0)
    eta: bool = False
    records: list[CheckRecord] = Field(default_factory=list)
    summary: Summary = Field(default_factory=Summary)

    @field_validator("records")
    @classmethod
    def sort_records(cls, v: list[CheckRecord]) -> list[CheckRecord]:
        return sorted(v, key=lambda record: record.id)

    @property
    def passed(self) -> bool:
        return self.summary.distinct == 0 and self.summary.unknown == 0

    @property
    def within_tolerance(self) -> bool:
        return all(record.within_tolerance for record in self.records)

    @property
    def exit_code(self) -> int:
        if self.summary.distinct:
            return EXIT_REFUTED
        if self.summary.unknown:
            return EXIT_INCONCLUSIVE
        return EXIT_PASS

    def failures(self) -> list[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True)
