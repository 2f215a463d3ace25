"""
Seeded random term generation
"""

import random
from collections.abc import Sequence

from .combinators import I
from .models import App, Const, Lam, NormalForm, Term, Var
from .reduction import normalize

LAMBDA_BIAS = 0.35
LEAF_BIAS = 0.15


class TermGenerator:
    """Random well-scoped terms with at most max_nodes App/Lam nodes"""

    def __init__(
        self,
        rng: random.Random,
        max_nodes: int = 25,
        constants: Sequence[Const] = (),
    ) -> None:
        self.rng = rng
        self.max_nodes = max_nodes
        self.constants = list(constants)

    def term(self, context: int = 0, nodes: int | None = None) -> Term:
        budget = self.rng.randint(0, self.max_nodes) if nodes is None else nodes
        return self._build(budget, context)

    def closed(self, nodes: int | None = None) -> Term:
        return self.term(0, nodes)

    def normal_closed(
        self, fuel: int = 200, attempts: int = 50, nodes: int | None = None
    ) -> Term:
        """A closed term in normal form, drawn until one normalizes within fuel"""
        for _ in range(attempts):
            outcome = normalize(self.closed(nodes), fuel)
            if isinstance(outcome, NormalForm) and outcome.term.size <= 4 * self.max_nodes:
                return outcome.term
        return I

    def redex(self, context: int = 0) -> tuple[Term, Term, Term]:
        """A beta-redex (λz.s)u in context together with its parts (body, u)"""
        body = self.term(context + 1, self.rng.randint(0, self.max_nodes // 2))
        arg = self.term(context, self.rng.randint(0, self.max_nodes // 2))
        return App(Lam(body), arg), body, arg

    def _build(self, budget: int, scope: int) -> Term:
        if budget <= 0 or self.rng.random() < LEAF_BIAS:
            return self._leaf(scope)
        if self.rng.random() < LAMBDA_BIAS:
            return Lam(self._build(budget - 1, scope + 1))
        split = self.rng.randint(0, budget - 1)
        return App(
            self._build(split, scope),
            self._build(budget - 1 - split, scope),
        )

    def _leaf(self, scope: int) -> Term:
        choices = scope + len(self.constants)
        if choices == 0:
            # Nothing in scope: fall back to the identity.
            return I
        pick = self.rng.randrange(choices)
        if pick < scope:
            return Var(pick)
        return self.constants[pick - scope]
