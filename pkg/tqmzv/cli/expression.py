"""A small expression language for elements of the word algebra.

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "h" | "t" | "1" | word | z[...] | "(" expr ")"
            | name "(" expr ("," expr)* ")"

Every value is an NcPoly; ``*`` is concatenation and scalars embed as
multiples of the unit word.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

from tqmzv.algebra.circ import circ_action, circ_plus
from tqmzv.algebra.coefficients import HBAR, T
from tqmzv.algebra.cyclic import rho_map
from tqmzv.algebra.maps import (
    d1_derivation,
    gamma_inverse,
    gamma_map,
    left_mult_x,
    phi_map,
    phi_t_map,
    s_inverse,
    s_map,
)
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.products import PRODUCTS
from tqmzv.algebra.words import LETTERS, parse_word
from tqmzv.exceptions import ExpressionError


class Token(NamedTuple):
    kind: str
    value: str
    where: tuple[int, int]


TOKENS = {
    "zword": r"z\[\s*\d+(?:\s*,\s*\d+)*\s*\]",
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "int": r"\d+",
    "lpar": r"\(",
    "rpar": r"\)",
    "plus": r"\+",
    "minus": r"-",
    "mul": r"\*",
    "div": r"/",
    "pow": r"\^",
    "comma": r",",
    "skip": r"\s+",
    "error": r".",
}
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{text})" for name, text in TOKENS.items()))

UNARY: dict[str, Callable[[NcPoly], NcPoly]] = {
    "S": s_map,
    "Sinv": s_inverse,
    "gamma": gamma_map,
    "gammainv": gamma_inverse,
    "phi": phi_map,
    "phit": phi_t_map,
    "d1": d1_derivation,
    "Lx": left_mult_x,
}
BINARY: dict[str, Callable[[NcPoly, NcPoly], NcPoly]] = {
    **PRODUCTS,
    "circ": circ_plus,
    "act": circ_action,
}
SCALARS = {"h": HBAR, "t": T}


def tokenize(source: str) -> Iterator[Token]:
    for match in _TOKEN_RE.finditer(source):
        kind = str(match.lastgroup)
        where = match.start(), match.end()
        if kind == "skip":
            continue
        if kind == "error":
            raise ExpressionError(f"unknown symbol {match.group()!r}", source, where)
        yield Token(kind, match.group(), where)


class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = list(tokenize(source))
        self.position = 0

    def error(self, message: str, token: Token | None = None) -> ExpressionError:
        if token is None:
            end = len(self.source)
            return ExpressionError(message, self.source, (end, end + 1))
        return ExpressionError(message, self.source, token.where)

    def peek(self) -> Token | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def advance(self, kind: str | None = None) -> Token:
        token = self.peek()
        if token is None:
            raise self.error(f"expected {kind or 'a term'}, found end of input")
        if kind is not None and token.kind != kind:
            raise self.error(f"expected {kind}, found {token.value!r}", token)
        self.position += 1
        return token

    def accept(self, kind: str) -> Token | None:
        token = self.peek()
        if token is not None and token.kind == kind:
            self.position += 1
            return token
        return None

    def parse(self) -> NcPoly:
        if not self.tokens:
            raise self.error("empty expression")
        value = self.expression()
        token = self.peek()
        if token is not None:
            raise self.error(f"unexpected {token.value!r}", token)
        return value

    def expression(self) -> NcPoly:
        value = self.term()
        while True:
            if self.accept("plus"):
                value = value + self.term()
            elif self.accept("minus"):
                value = value - self.term()
            else:
                return value

    def term(self) -> NcPoly:
        value = self.unary()
        while self.accept("mul"):
            value = value * self.unary()
        return value

    def unary(self) -> NcPoly:
        if self.accept("minus"):
            return -self.unary()
        return self.power()

    def power(self) -> NcPoly:
        value = self.atom()
        if self.accept("pow"):
            exponent = self.advance("int")
            value = value ** int(exponent.value)
        return value

    def atom(self) -> NcPoly:
        token = self.advance()
        if token.kind == "int":
            return NcPoly.scalar(self.rational(token))
        if token.kind == "zword":
            return NcPoly.word(parse_word(token.value))
        if token.kind == "lpar":
            value = self.expression()
            self.advance("rpar")
            return value
        if token.kind == "name":
            if self.accept("lpar"):
                return self.call(token)
            return self.symbol(token)
        raise self.error(f"unexpected {token.value!r}", token)

    def rational(self, token: Token) -> Fraction | int:
        if not self.accept("div"):
            return int(token.value)
        denominator = self.advance("int")
        if int(denominator.value) == 0:
            raise self.error("division by zero", denominator)
        value = Fraction(int(token.value), int(denominator.value))
        return value.numerator if value.denominator == 1 else value

    def symbol(self, token: Token) -> NcPoly:
        if token.value in SCALARS:
            return NcPoly.scalar(SCALARS[token.value])
        if set(token.value) <= LETTERS:
            return NcPoly.word(token.value)
        if token.value in UNARY or token.value in BINARY or token.value == "rho":
            raise self.error(f"{token.value} needs arguments", token)
        raise self.error(f"unknown name {token.value!r}", token)

    def arguments(self) -> list[NcPoly]:
        args = [self.expression()]
        while self.accept("comma"):
            args.append(self.expression())
        self.advance("rpar")
        return args

    def call(self, token: Token) -> NcPoly:
        name = token.value
        args = self.arguments()
        if name in UNARY:
            self.arity(token, args, 1)
            return UNARY[name](args[0])
        if name in BINARY:
            self.arity(token, args, 2)
            return BINARY[name](args[0], args[1])
        if name == "rho":
            self.arity(token, args, 2)
            return rho_map(self.integer(token, args[0]), args[1])
        raise self.error(f"unknown function {name!r}", token)

    def arity(self, token: Token, args: list[NcPoly], count: int) -> None:
        if len(args) != count:
            raise self.error(
                f"{token.value} takes {count} argument(s), got {len(args)}", token
            )

    def integer(self, token: Token, value: NcPoly) -> int:
        if value.is_zero():
            return 0
        constant = value.coefficient("").constant_term
        if not isinstance(constant, int) or value != NcPoly.scalar(constant):
            raise self.error(f"{token.value} needs an integer first argument", token)
        return constant


def parse_expression(source: str) -> NcPoly:
    return Parser(source).parse()
