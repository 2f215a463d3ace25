"""
Why endomorphism clones of finite sets carry no semi-closed structure
"""

from pydantic import BaseModel, Field

from ..clones.finite import MAX_CARRIER, FiniteEndoTheory


class ObstructionWitness(BaseModel):
    """A retraction L(n+1) -> L(n) with a section needs |L(n+1)| <= |L(n)|"""

    carrier_size: int = Field(..., ge=1)
    arity: int = Field(default=1, ge=0)
    smaller: int = Field(..., description="|T(n)|")
    larger: int = Field(..., description="|T(n+1)|")
    semi_closed_possible: bool
    explanation: str

    @property
    def cardinalities(self) -> tuple[int, int]:
        return self.smaller, self.larger


def semi_closed_obstruction(theory: FiniteEndoTheory, n: int = 1) -> ObstructionWitness:
    """Counting witness at arity n; only the one-point carrier escapes"""
    k = theory.k
    smaller = theory.cardinality(n)
    larger = theory.cardinality(n + 1)
    if k == 1:
        return ObstructionWitness(
            carrier_size=k,
            arity=n,
            smaller=smaller,
            larger=larger,
            semi_closed_possible=True,
            explanation="terminal theory, trivially semi-closed",
        )
    return ObstructionWitness(
        carrier_size=k,
        arity=n,
        smaller=smaller,
        larger=larger,
        semi_closed_possible=False,
        explanation=(
            f"|T({n + 1})| = {larger} > {smaller} = |T({n})|, "
            f"so rho: T({n}) -> T({n + 1}) cannot be onto"
        ),
    )


def obstruction_table(max_carrier: int = MAX_CARRIER, max_arity: int = 2) -> list[ObstructionWitness]:
    """Witnesses for every carrier 1..max_carrier and arity 0..max_arity"""
    return [
        semi_closed_obstruction(FiniteEndoTheory(k), n)
        for k in range(1, max_carrier + 1)
        for n in range(max_arity + 1)
    ]
