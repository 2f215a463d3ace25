"""
Parsing and printing of lambda-terms

Grammar (UTF-8):
    term   ::= lam | appseq
    lam    ::= ("\\" | "λ") ident+ "." term
    appseq ::= atom+
    atom   ::= ident | "#" ident | "(" term ")"
"""

import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

from .combinators import combinator, is_combinator
from .models import (
    App,
    Const,
    Lam,
    ScopeError,
    Term,
    TermSyntaxError,
    UnboundIdentifierError,
    Var,
)
from .reduction import unwind

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_BINDER_NAMES = ("x", "y", "z", "w", "u", "v", "s", "t", "r")


class TokenKind(str, Enum):
    LAMBDA = "lambda"
    DOT = "dot"
    LPAREN = "("
    RPAREN = ")"
    IDENT = "identifier"
    CONST = "constant"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    length = len(text)
    while position < length:
        char = text[position]
        if char.isspace():
            position += 1
        elif char in "\\λ":
            yield Token(TokenKind.LAMBDA, char, position)
            position += 1
        elif char == ".":
            yield Token(TokenKind.DOT, char, position)
            position += 1
        elif char == "(":
            yield Token(TokenKind.LPAREN, char, position)
            position += 1
        elif char == ")":
            yield Token(TokenKind.RPAREN, char, position)
            position += 1
        elif char == "#":
            match = IDENTIFIER.match(text, position + 1)
            if match is None:
                raise TermSyntaxError("expected constant name after '#'", position)
            yield Token(TokenKind.CONST, match.group(), position)
            position = match.end()
        else:
            match = IDENTIFIER.match(text, position)
            if match is None:
                raise TermSyntaxError(f"unexpected character {char!r}", position)
            yield Token(TokenKind.IDENT, match.group(), position)
            position = match.end()
    yield Token(TokenKind.END, "", length)


class _Parser:
    """Recursive descent over the token stream"""

    def __init__(
        self,
        text: str,
        context: Sequence[str],
        constants: Mapping[str, Term | None],
    ) -> None:
        self.tokens = list(tokenize(text))
        self.index = 0
        self.context = list(context)
        self.constants = constants
        self.binders: list[str] = []

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        token = self.current
        if token.kind is not kind:
            raise TermSyntaxError(
                f"expected {kind.value}, found {token.kind.value}", token.position
            )
        return self.advance()

    def parse(self) -> Term:
        term = self.term()
        token = self.current
        if token.kind is not TokenKind.END:
            raise TermSyntaxError(f"unexpected {token.kind.value}", token.position)
        return term

    def term(self) -> Term:
        if self.current.kind is TokenKind.LAMBDA:
            return self.lam()
        return self.appseq()

    def lam(self) -> Term:
        self.expect(TokenKind.LAMBDA)
        names = [self.expect(TokenKind.IDENT).text]
        while self.current.kind is TokenKind.IDENT:
            names.append(self.advance().text)
        self.expect(TokenKind.DOT)
        self.binders.extend(names)
        body = self.term()
        del self.binders[-len(names) :]
        for _ in names:
            body = Lam(body)
        return body

    def appseq(self) -> Term:
        result = self.atom()
        while self.current.kind in (
            TokenKind.IDENT,
            TokenKind.CONST,
            TokenKind.LPAREN,
        ):
            result = App(result, self.atom())
        return result

    def atom(self) -> Term:
        token = self.current
        match token.kind:
            case TokenKind.IDENT:
                self.advance()
                return self.variable(token)
            case TokenKind.CONST:
                self.advance()
                return self.constant(token.text)
            case TokenKind.LPAREN:
                self.advance()
                inner = self.term()
                self.expect(TokenKind.RPAREN)
                return inner
            case _:
                raise TermSyntaxError(
                    f"expected a term, found {token.kind.value}", token.position
                )

    def variable(self, token: Token) -> Term:
        name = token.text
        for distance, binder in enumerate(reversed(self.binders)):
            if binder == name:
                return Var(distance)
        if name in self.context:
            return Var(len(self.binders) + self.context.index(name))
        raise UnboundIdentifierError(f"unbound identifier {name!r}", token.position)

    def constant(self, name: str) -> Term:
        if name in self.constants:
            return Const(name, self.constants[name])
        if is_combinator(name):
            return Const(name, combinator(name))
        return Const(name)


def parse(
    text: str,
    context: Sequence[str] = (),
    constants: Mapping[str, Term | None] | None = None,
) -> Term:
    """Parse term text; free identifiers resolve against context left to right

    `#name` takes its unfolding from constants, then from the combinator table;
    otherwise the constant is inert.
    """
    return _Parser(text, context, constants or {}).parse()


def _fresh(avoid: set[str]) -> str:
    for name in _BINDER_NAMES:
        if name not in avoid:
            return name
    counter = 1
    while True:
        for base in _BINDER_NAMES[:3]:
            candidate = f"{base}{counter}"
            if candidate not in avoid:
                return candidate
        counter += 1


def print_term(t: Term, context_names: Sequence[str] = ()) -> str:
    """Render t with fresh binder names that avoid every name in scope"""
    context = list(context_names)
    return _render(t, context, [], set(context))


def _render(t: Term, context: list[str], scope: list[str], avoid: set[str]) -> str:
    match t:
        case Lam():
            names: list[str] = []
            inner_avoid = set(avoid)
            node: Term = t
            while isinstance(node, Lam):
                name = _fresh(inner_avoid)
                inner_avoid.add(name)
                names.append(name)
                node = node.body
            header = "".join(f"\\{name}." for name in names)
            body = _render(node, context, scope + names, inner_avoid)
            return f"{header} {body}"
        case App():
            head, args = unwind(t)
            parts = [_operand(head, context, scope, avoid, head_position=True)]
            parts.extend(_operand(arg, context, scope, avoid) for arg in args)
            return " ".join(parts)
        case Var(index):
            if index < len(scope):
                return scope[-1 - index]
            position = index - len(scope)
            if position >= len(context):
                raise ScopeError(f"Var({index}) has no name in context {context}")
            return context[position]
        case Const(name):
            return f"#{name}"
        case _:
            raise TypeError(f"not a term: {t!r}")


def _operand(
    t: Term,
    context: list[str],
    scope: list[str],
    avoid: set[str],
    head_position: bool = False,
) -> str:
    text = _render(t, context, scope, avoid)
    if isinstance(t, Lam) or (isinstance(t, App) and not head_position):
        return f"({text})"
    return text


def context_names(n: int, prefix: str = "x") -> list[str]:
    """Default names x0 ... x{n-1} for an arity-n context"""
    return [f"{prefix}{i}" for i in range(n)]
