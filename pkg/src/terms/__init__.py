"""Term core: de Bruijn syntax, substitution, reduction and equality"""

from .combinators import (
    OMEGA,
    ONE,
    PAIR,
    TERMINAL,
    THETA,
    B,
    F,
    I,
    P,
    Q,
    S,
    T,
    after,
    application_chain,
    apply,
    combinator,
    combinator_names,
    lams,
    one_n,
)
from .generators import TermGenerator
from .models import (
    App,
    ArityMismatchError,
    Const,
    EqVerdict,
    FuelExhausted,
    Lam,
    NormalForm,
    NormalizeOutcome,
    ScopeError,
    Term,
    TermError,
    TermSyntaxError,
    UnboundIdentifierError,
    UnknownCombinatorError,
    Var,
    Verdict,
)
from .reduction import (
    DEFAULT_FUEL,
    BetaEquality,
    beta_eq,
    beta_step,
    expand_constants,
    normalize,
)
from .substitution import (
    constants_of,
    instantiate,
    is_closed,
    rename,
    scope_of,
    shift,
    subst,
    substitute_constants,
)
from .syntax import context_names, parse, print_term

__all__ = [
    "App",
    "ArityMismatchError",
    "B",
    "BetaEquality",
    "Const",
    "DEFAULT_FUEL",
    "EqVerdict",
    "F",
    "FuelExhausted",
    "I",
    "Lam",
    "NormalForm",
    "NormalizeOutcome",
    "OMEGA",
    "ONE",
    "P",
    "PAIR",
    "Q",
    "S",
    "ScopeError",
    "T",
    "TERMINAL",
    "THETA",
    "Term",
    "TermError",
    "TermGenerator",
    "TermSyntaxError",
    "UnboundIdentifierError",
    "UnknownCombinatorError",
    "Var",
    "Verdict",
    "after",
    "application_chain",
    "apply",
    "beta_eq",
    "beta_step",
    "combinator",
    "combinator_names",
    "constants_of",
    "context_names",
    "expand_constants",
    "instantiate",
    "is_closed",
    "lams",
    "normalize",
    "one_n",
    "parse",
    "print_term",
    "rename",
    "scope_of",
    "shift",
    "subst",
    "substitute_constants",
]
