"""
Clone-law harness: unit, projection, associativity and renaming laws
checked on samples or, for finite theories, on every instance
"""

import itertools
import random
from collections.abc import Iterator, Sequence
from typing import Literal

from ..terms.models import EqVerdict
from ..utils.logger import get_logger
from .interfaces import Theory
from .models import (
    LAWS,
    FinMap,
    LawInstance,
    LawName,
    LawReport,
    LawTally,
    TheoryElement,
)

logger = get_logger(__name__)

MAX_STORED_INSTANCES = 100

Budget = int | Literal["exhaustive"]


class _LawRecorder:
    def __init__(
        self,
        theory: Theory,
        mode: Literal["sampled", "exhaustive"],
        max_arity: int,
    ) -> None:
        self.theory = theory
        self.report = LawReport(
            theory_id=theory.theory_id,
            mode=mode,
            max_arity=max_arity,
            laws={law: LawTally() for law in LAWS},
        )

    def check(
        self,
        law: LawName,
        lhs: TheoryElement,
        rhs: TheoryElement,
        instance: Sequence[TheoryElement],
    ) -> EqVerdict:
        verdict = self.theory.element_eq(lhs, rhs)
        tally = self.report.laws[law]
        if verdict.is_equal:
            tally.passed += 1
            return verdict
        if verdict.is_distinct:
            tally.failed += 1
            stored = self.report.failures
            logger.info("Clone law failed", theory=self.theory.theory_id, law=law)
        else:
            tally.inconclusive += 1
            stored = self.report.inconclusive
        if len(stored) < MAX_STORED_INSTANCES:
            stored.append(
                LawInstance(
                    law=law,
                    instance=[self.theory.describe(e) for e in instance],
                    verdict=verdict.verdict,
                    steps=verdict.steps,
                )
            )
        return verdict


def _random_map(n: int, m: int, rng: random.Random) -> FinMap:
    return FinMap(n, m, tuple(rng.randrange(m) for _ in range(n)))


def _sampled(
    recorder: _LawRecorder, max_arity: int, samples: int, rng: random.Random
) -> None:
    theory = recorder.theory
    for _ in range(samples):
        n = rng.randint(0, max_arity)
        # a map n -> m needs m > 0 once n > 0
        m = rng.randint(1 if n else 0, max_arity)
        p = rng.randint(0, max_arity)
        t = theory.sample(n, rng)
        a = [theory.sample(m, rng) for _ in range(n)]
        b = [theory.sample(p, rng) for _ in range(m)]
        f = _random_map(n, m, rng)

        recorder.check("unit_right", theory.compose(t, theory.projections(n), n), t, [t])
        recorder.check("unit_left", theory.compose(theory.identity(), [t]), t, [t])
        for i in range(n):
            pr = theory.proj(n, i)
            recorder.check("projection", theory.compose(pr, a, m), a[i], [pr, *a])
        recorder.check(
            "associativity",
            theory.compose(theory.compose(t, a, m), b, p),
            theory.compose(t, [theory.compose(ai, b, p) for ai in a], p),
            [t, *a, *b],
        )
        renamed = theory.rename(t, f)
        recorder.check(
            "rename_naturality",
            theory.compose(renamed, b, p),
            theory.compose(t, [b[f(i)] for i in range(n)], p),
            [t, *b],
        )
        recorder.check("rename_formula", renamed, theory.rename_by_formula(t, f), [t])


def _tuples(
    elements: list[TheoryElement], length: int
) -> Iterator[tuple[TheoryElement, ...]]:
    return itertools.product(elements, repeat=length)


def _exhaustive(recorder: _LawRecorder, max_arity: int) -> None:
    theory = recorder.theory
    arities = range(max_arity + 1)
    elements = {n: list(theory.enumerate(n)) for n in arities}

    for n in arities:
        projections = theory.projections(n)
        for t in elements[n]:
            recorder.check("unit_right", theory.compose(t, projections, n), t, [t])
            recorder.check("unit_left", theory.compose(theory.identity(), [t]), t, [t])

    for n, m in itertools.product(arities, arities):
        for a in _tuples(elements[m], n):
            for i in range(n):
                pr = theory.proj(n, i)
                recorder.check("projection", theory.compose(pr, a, m), a[i], [pr, *a])

    for n, m, p in itertools.product(arities, arities, arities):
        for b in _tuples(elements[p], m):
            after_b = {ai: theory.compose(ai, b, p) for ai in elements[m]}
            for a in _tuples(elements[m], n):
                inner = [after_b[ai] for ai in a]
                for t in elements[n]:
                    recorder.check(
                        "associativity",
                        after_b[theory.compose(t, a, m)],
                        theory.compose(t, inner, p),
                        [t, *a, *b],
                    )

    for n, m in itertools.product(arities, arities):
        for f in FinMap.all_maps(n, m):
            for t in elements[n]:
                renamed = theory.rename(t, f)
                recorder.check(
                    "rename_formula", renamed, theory.rename_by_formula(t, f), [t]
                )
                for p in arities:
                    for c in _tuples(elements[p], m):
                        recorder.check(
                            "rename_naturality",
                            theory.compose(renamed, c, p),
                            theory.compose(t, [c[f(i)] for i in range(n)], p),
                            [t, *c],
                        )


def check_clone_laws(
    theory: Theory,
    max_arity: int = 2,
    budget: Budget = 500,
    rng: random.Random | None = None,
) -> LawReport:
    """Check the clone laws of theory up to max_arity

    budget is a sample count, or "exhaustive" for finite theories.
    Failures are reported, never raised.
    """
    if budget == "exhaustive":
        if not theory.is_finite:
            raise ValueError(f"{theory.theory_id} cannot be checked exhaustively")
        recorder = _LawRecorder(theory, "exhaustive", max_arity)
        _exhaustive(recorder, max_arity)
    else:
        recorder = _LawRecorder(theory, "sampled", max_arity)
        _sampled(recorder, max_arity, budget, rng or random.Random(0))
    report = recorder.report
    logger.info(
        "Clone laws checked",
        theory=theory.theory_id,
        mode=report.mode,
        instances=report.instance_count,
        failed=report.failure_count,
        inconclusive=report.inconclusive_count,
    )
    return report
