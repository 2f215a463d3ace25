"""
Shifting, renaming and capture-free simultaneous substitution on de Bruijn terms
"""

from collections.abc import Sequence

from .models import App, ArityMismatchError, Const, Lam, ScopeError, Term, Var


def shift(t: Term, amount: int, cutoff: int = 0) -> Term:
    """Add amount to every variable index >= cutoff"""
    if amount == 0:
        return t
    match t:
        case Var(index):
            if index < cutoff:
                return t
            if index + amount < 0:
                raise ScopeError(f"shifting Var({index}) by {amount} leaves scope")
            return Var(index + amount)
        case App(fun, arg):
            return App(shift(fun, amount, cutoff), shift(arg, amount, cutoff))
        case Lam(body):
            return Lam(shift(body, amount, cutoff + 1))
        case _:
            return t


def scope_of(t: Term) -> int:
    """Smallest context size in which t is well-scoped"""

    def walk(node: Term, depth: int) -> int:
        match node:
            case Var(index):
                return index - depth + 1 if index >= depth else 0
            case App(fun, arg):
                return max(walk(fun, depth), walk(arg, depth))
            case Lam(body):
                return walk(body, depth + 1)
            case _:
                return 0

    return walk(t, 0)


def is_closed(t: Term) -> bool:
    return scope_of(t) == 0


def occurs_free(t: Term, index: int) -> bool:
    """Whether Var(index) relative to the top of t occurs free in t"""
    match t:
        case Var(i):
            return i == index
        case App(fun, arg):
            return occurs_free(fun, index) or occurs_free(arg, index)
        case Lam(body):
            return occurs_free(body, index + 1)
        case _:
            return False


def subst(t: Term, args: Sequence[Term], arity: int | None = None) -> Term:
    """Simultaneously replace context variable x_i of t by args[i]

    t lives in a context of len(args) variables; the args share one context
    of some size m, which becomes the context of the result.
    """
    n = len(args)
    if arity is not None and arity != n:
        raise ArityMismatchError(f"term of arity {arity} given {n} arguments")

    def walk(node: Term, depth: int) -> Term:
        match node:
            case Var(index):
                if index < depth:
                    return node
                position = index - depth
                if position >= n:
                    raise ScopeError(
                        f"Var({index}) under {depth} binders exceeds context {n}"
                    )
                return shift(args[position], depth)
            case App(fun, arg):
                return App(walk(fun, depth), walk(arg, depth))
            case Lam(body):
                return Lam(walk(body, depth + 1))
            case _:
                return node

    return walk(t, 0)


def rename(t: Term, images: Sequence[int]) -> Term:
    """Send context variable x_i to x_{images[i]}"""

    def walk(node: Term, depth: int) -> Term:
        match node:
            case Var(index):
                if index < depth:
                    return node
                position = index - depth
                if position >= len(images):
                    raise ScopeError(
                        f"Var({index}) under {depth} binders exceeds context "
                        f"{len(images)}"
                    )
                return Var(depth + images[position])
            case App(fun, arg):
                return App(walk(fun, depth), walk(arg, depth))
            case Lam(body):
                return Lam(walk(body, depth + 1))
            case _:
                return node

    return walk(t, 0)


def instantiate(body: Term, value: Term) -> Term:
    """Contract (λ.body) value: Var 0 becomes value, outer indices drop by one"""

    def walk(node: Term, depth: int) -> Term:
        match node:
            case Var(index):
                if index < depth:
                    return node
                if index == depth:
                    return shift(value, depth)
                return Var(index - 1)
            case App(fun, arg):
                return App(walk(fun, depth), walk(arg, depth))
            case Lam(inner):
                return Lam(walk(inner, depth + 1))
            case _:
                return node

    return walk(body, 0)


def substitute_constants(t: Term, images: dict[str, Term]) -> Term:
    """Replace constants by closed terms, leaving other constants untouched"""
    if not images:
        return t
    match t:
        case Const(name):
            return images.get(name, t)
        case App(fun, arg):
            return App(
                substitute_constants(fun, images), substitute_constants(arg, images)
            )
        case Lam(body):
            return Lam(substitute_constants(body, images))
        case _:
            return t


def abstract_constants(t: Term, names: Sequence[str], offset: int) -> Term:
    """Turn constant names[j] into the context variable x_{offset + j}"""
    positions = {name: j for j, name in enumerate(names)}

    def walk(node: Term, depth: int) -> Term:
        match node:
            case Const(name) if name in positions:
                return Var(depth + offset + positions[name])
            case App(fun, arg):
                return App(walk(fun, depth), walk(arg, depth))
            case Lam(body):
                return Lam(walk(body, depth + 1))
            case _:
                return node

    return walk(t, 0)


def constants_of(t: Term) -> set[str]:
    match t:
        case Const(name):
            return {name}
        case App(fun, arg):
            return constants_of(fun) | constants_of(arg)
        case Lam(body):
            return constants_of(body)
        case _:
            return set()
