"""Test check records, aggregates and suite reports"""

import json

import pytest

from src.reporting import (
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    EXIT_REFUTED,
    Aggregate,
    CheckRecord,
    ReportBuilder,
    SuiteReport,
    Summary,
)
from src.terms import OMEGA, App, BetaEquality, EqVerdict, F, I, T, Var, Verdict


class TestAggregate:
    """Test tallies over many instances"""

    def test_all_equal(self) -> None:
        """Only Equal instances give Equal"""
        tally = Aggregate("a", "x = x")
        for steps in (1, 4, 2):
            tally.add(EqVerdict.equal(steps))

        record = tally.to_record()
        assert record.verdict is Verdict.EQUAL
        assert record.steps == 4
        assert record.instances == 3

    def test_distinct_wins(self) -> None:
        """One Distinct refutes and keeps its witness"""
        tally = Aggregate("a", "x = x", tolerance=1.0)
        tally.add(EqVerdict.unknown(10), ["u", "v"])
        tally.add(EqVerdict.distinct(3), ["s", "t"])

        assert tally.verdict is Verdict.DISTINCT
        assert tally.to_record().terms == ["s", "t"]

    def test_single_unknown_keeps_verdict(self) -> None:
        """One Unknown makes the verdict Unknown whatever the tolerance"""
        tally = Aggregate("a", "x = x", tolerance=0.1)
        for _ in range(19):
            tally.add(EqVerdict.equal(1))
        tally.add(EqVerdict.unknown(50), ["w"])
        record = tally.to_record()

        assert tally.verdict is Verdict.UNKNOWN
        assert not record.passed
        assert record.detail == "equal=19 distinct=0 unknown=1"
        assert record.unknown_instances == 1

    def test_tolerance_is_carried(self) -> None:
        """The tolerated share is judged from the record, not the verdict"""
        tally = Aggregate("a", "x = x", tolerance=0.1)
        for _ in range(19):
            tally.add(EqVerdict.equal(1))
        tally.add(EqVerdict.unknown(50))

        assert tally.to_record().within_tolerance

        tally.add(EqVerdict.unknown(50))
        tally.add(EqVerdict.unknown(50))
        assert not tally.to_record().within_tolerance

    def test_distinct_is_never_tolerated(self) -> None:
        """Tolerance covers Unknown instances only"""
        tally = Aggregate("a", "x = x", tolerance=1.0)
        tally.add(EqVerdict.distinct(1))

        assert not tally.to_record().within_tolerance

    def test_note_joins_detail(self) -> None:
        """A note follows the counts"""
        tally = Aggregate("a", "x = x", note="holds by construction")
        tally.add(EqVerdict.equal(0))

        assert tally.to_record().detail == "equal=1 distinct=0 unknown=0; holds by construction"

    def test_empty_aggregate(self) -> None:
        """Nothing checked is vacuously Equal with one nominal instance"""
        record = Aggregate("a", "x = x").to_record()

        assert record.passed
        assert record.instances == 1


class TestReportBuilder:
    """Test record collection and report assembly"""

    def setup_method(self) -> None:
        """Setup test fixtures"""
        self.builder = ReportBuilder(BetaEquality(fuel=100))

    def test_check_eq_prints_terms(self) -> None:
        """Records carry both sides in concrete syntax"""
        verdict = self.builder.check_eq("s.id", "I a = a", App(I, Var(0)), Var(0), ("a",))
        record = self.builder.records[0]

        assert verdict.is_equal
        assert record.terms == ["(\\x. x) a", "a"]

    def test_duplicate_ids(self) -> None:
        """Check ids are unique within a builder"""
        self.builder.record("s.one", "counting", True)
        with pytest.raises(ValueError):
            self.builder.record("s.one", "counting", True)
        with pytest.raises(ValueError):
            self.builder.aggregate("s.one", "counting")

    def test_records_sorted(self) -> None:
        """Records come out ordered by id"""
        self.builder.record("s.b", "second", True)
        self.builder.aggregate("s.a", "first").add(EqVerdict.equal(0))

        assert [record.id for record in self.builder.records] == ["s.a", "s.b"]

    def test_exit_codes(self) -> None:
        """Distinct beats Unknown beats Equal"""
        self.builder.check_eq("s.equal", "T = T", T, T)
        assert self.builder.build("s", 0, 100).exit_code == EXIT_PASS

        self.builder.check_eq("s.unknown", "Ω = I", OMEGA, I)
        assert self.builder.build("s", 0, 100).exit_code == EXIT_INCONCLUSIVE

        self.builder.check_eq("s.distinct", "T = F", T, F)
        report = self.builder.build("s", 0, 100)
        assert report.exit_code == EXIT_REFUTED
        assert [record.id for record in report.failures()] == ["s.distinct", "s.unknown"]

    def test_tolerated_unknown_still_exits_inconclusive(self) -> None:
        """An aggregate with a few Unknowns is counted and exits 2"""
        tally = self.builder.aggregate("s.sampled", "x = x", tolerance=0.05)
        for _ in range(99):
            tally.add(EqVerdict.equal(1))
        tally.add(EqVerdict.unknown(100))
        report = self.builder.build("s", 0, 100)

        assert report.summary == Summary(equal=0, distinct=0, unknown=1)
        assert report.exit_code == EXIT_INCONCLUSIVE
        assert not report.passed
        assert report.within_tolerance

    def test_build_summary(self) -> None:
        """The summary counts verdicts"""
        self.builder.record("s.pass", "yes", True)
        self.builder.record("s.fail", "no", False)
        report = self.builder.build("s", seed=7, fuel=100)

        assert report.summary == Summary(equal=1, distinct=1, unknown=0)
        assert not report.passed
        assert not self.builder.passed


class TestSuiteReport:
    """Test the JSON form of reports"""

    def test_json_shape(self) -> None:
        """Schema version under "schema", records sorted by id"""
        records = [
            CheckRecord(id="z", identity="later", verdict=Verdict.EQUAL),
            CheckRecord(id="a", identity="earlier", verdict=Verdict.EQUAL),
        ]
        report = SuiteReport(suite="demo", seed=3, fuel=50, records=records)
        payload = json.loads(report.to_json())

        assert payload["schema"] == 1
        assert payload["suite"] == "demo"
        assert [record["id"] for record in payload["records"]] == ["a", "z"]
        assert payload["records"][0]["verdict"] == "Equal"

    def test_validation(self) -> None:
        """Ids are non-empty and fuel is positive"""
        with pytest.raises(ValueError):
            CheckRecord(id="", identity="x", verdict=Verdict.EQUAL)
        with pytest.raises(ValueError):
            SuiteReport(suite="demo", seed=0, fuel=0)
