"""
Collects check records and assembles suite reports
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ..clones.models import LawReport
from ..terms import BetaEquality, EqVerdict, Term, Verdict, print_term
from ..utils.logger import get_logger, log_check_failure
from .models import CheckRecord, Summary, SuiteReport

logger = get_logger(__name__)


@dataclass
class Aggregate:
    """Running tally for one identity checked on many samples

    Any Unknown instance leaves the verdict Unknown. `tolerance` is the share
    of Unknown instances an acceptance check may accept; the record carries it
    along with the counts.
    """

    id: str
    identity: str
    tolerance: float = 0.0
    equal: int = 0
    distinct: int = 0
    unknown: int = 0
    steps: int = 0
    witness: list[str] = field(default_factory=list)
    note: str | None = None

    @property
    def instances(self) -> int:
        return self.equal + self.distinct + self.unknown

    def add(self, verdict: EqVerdict, terms: Sequence[str] = ()) -> EqVerdict:
        self.steps = max(self.steps, verdict.steps)
        if verdict.is_equal:
            self.equal += 1
            return verdict
        if verdict.is_distinct:
            if not self.distinct:
                self.witness = list(terms)
            self.distinct += 1
        else:
            if not self.distinct and not self.unknown:
                self.witness = list(terms)
            self.unknown += 1
        return verdict

    @property
    def verdict(self) -> Verdict:
        if self.distinct:
            return Verdict.DISTINCT
        if self.unknown:
            return Verdict.UNKNOWN
        return Verdict.EQUAL

    @property
    def detail(self) -> str:
        counts = f"equal={self.equal} distinct={self.distinct} unknown={self.unknown}"
        return f"{counts}; {self.note}" if self.note else counts

    def to_record(self) -> CheckRecord:
        return CheckRecord(
            id=self.id,
            identity=self.identity,
            verdict=self.verdict,
            steps=self.steps,
            terms=self.witness,
            detail=self.detail,
            instances=max(self.instances, 1),
            unknown_instances=self.unknown,
            tolerance=self.tolerance,
        )


class ReportBuilder:
    """Accumulates records under unique ids"""

    def __init__(self, equality: BetaEquality | None = None) -> None:
        self.equality = equality or BetaEquality()
        self._records: dict[str, CheckRecord] = {}
        self._aggregates: dict[str, Aggregate] = {}

    def _claim(self, check_id: str) -> None:
        if check_id in self._records or check_id in self._aggregates:
            raise ValueError(f"duplicate check id {check_id!r}")

    def add(self, record: CheckRecord) -> CheckRecord:
        self._claim(record.id)
        self._records[record.id] = record
        if not record.passed:
            log_check_failure(record.id, verdict=record.verdict.value)
        return record

    def extend(self, records: Iterable[CheckRecord]) -> None:
        for record in records:
            self.add(record)

    def check_eq(
        self,
        check_id: str,
        identity: str,
        lhs: Term,
        rhs: Term,
        context: Sequence[str] = (),
        detail: str | None = None,
    ) -> EqVerdict:
        """Run beta_eq on lhs and rhs and record the printed terms"""
        verdict = self.equality.eq(lhs, rhs)
        self.record_verdict(
            check_id,
            identity,
            verdict,
            [print_term(lhs, context), print_term(rhs, context)],
            detail,
        )
        return verdict

    def record_verdict(
        self,
        check_id: str,
        identity: str,
        verdict: EqVerdict,
        terms: Sequence[str] = (),
        detail: str | None = None,
        instances: int = 1,
    ) -> CheckRecord:
        return self.add(
            CheckRecord(
                id=check_id,
                identity=identity,
                verdict=verdict.verdict,
                steps=verdict.steps,
                terms=list(terms),
                detail=detail,
                instances=instances,
                unknown_instances=instances if verdict.is_unknown else 0,
            )
        )

    def record(
        self,
        check_id: str,
        identity: str,
        passed: bool,
        detail: str | None = None,
        instances: int = 1,
    ) -> CheckRecord:
        """Record a check that is not a beta-equality (counting, tables)"""
        verdict = EqVerdict.equal(0) if passed else EqVerdict.distinct(0)
        return self.record_verdict(
            check_id, identity, verdict, detail=detail, instances=instances
        )

    def aggregate(self, check_id: str, identity: str, tolerance: float = 0.0) -> Aggregate:
        self._claim(check_id)
        tally = Aggregate(check_id, identity, tolerance)
        self._aggregates[check_id] = tally
        return tally

    def add_law_report(self, prefix: str, report: LawReport, tolerance: float = 0.0) -> None:
        """One record per clone law"""
        for law, tally in report.laws.items():
            stored = [f for f in report.failures if f.law == law] or [
                i for i in report.inconclusive if i.law == law
            ]
            aggregate = Aggregate(
                f"{prefix}.{law}",
                f"{law} law of {report.theory_id} ({report.mode})",
                tolerance,
                equal=tally.passed,
                distinct=tally.failed,
                unknown=tally.inconclusive,
                steps=max((i.steps for i in stored), default=0),
                witness=stored[0].instance if stored else [],
            )
            self._claim(aggregate.id)
            self._aggregates[aggregate.id] = aggregate

    @property
    def records(self) -> list[CheckRecord]:
        records = list(self._records.values())
        records.extend(aggregate.to_record() for aggregate in self._aggregates.values())
        return sorted(records, key=lambda record: record.id)

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def build(self, suite: str, seed: int, fuel: int, eta: bool = False) -> SuiteReport:
        records = self.records
        for record in records:
            if record.id in self._aggregates and not record.passed:
                log_check_failure(record.id, verdict=record.verdict.value)
        report = SuiteReport(
            suite=suite,
            seed=seed,
            fuel=fuel,
            eta=eta,
            records=records,
            summary=Summary.of(records),
        )
        logger.info(
            "Suite report built",
            suite=suite,
            records=len(records),
            distinct=report.summary.distinct,
            unknown=report.summary.unknown,
        )
        return report
