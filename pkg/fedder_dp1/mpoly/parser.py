"""Recursive-descent parser for polynomial text.

Grammar (loosest to tightest)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Juxtaposition is rejected. Offsets in errors are byte offsets into the UTF-8 text.
``u`` names the generator of the coefficient field when that field is an extension.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from typing import List

from ..errors import ParseError, UnknownVariableError
from ..fields import FieldDesc
from .poly import DP1_ALPHABET, Alphabet, MultiPoly

_OPERATORS = "+-*^()"
_NAME_START = string.ascii_letters + "_"
_NAME_CHARS = _NAME_START + string.digits


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", an operator character, or "eof"
    value: str
    offset: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    offsets = [0]
    for ch in text:
        offsets.append(offsets[-1] + len(ch.encode("utf-8")))
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in string.digits:
            j = i
            while j < n and text[j] in string.digits:
                j += 1
            tokens.append(_Token("int", text[i:j], offsets[i]))
            i = j
        elif ch in _NAME_START:
            j = i
            while j < n and text[j] in _NAME_CHARS:
                j += 1
            tokens.append(_Token("name", text[i:j], offsets[i]))
            i = j
        elif ch in _OPERATORS:
            tokens.append(_Token(ch, ch, offsets[i]))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", offsets[i], text)
    tokens.append(_Token("eof", "", offsets[n]))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldDesc, alphabet: Alphabet):
        self.text = text
        self.field = field
        self.alphabet = alphabet
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: _Token) -> ParseError:
        return ParseError(message, tok.offset, self.text)

    def parse(self) -> MultiPoly:
        result = self.expr()
        tok = self.current
        if tok.kind == ")":
            raise self.error("unmatched ')'", tok)
        if tok.kind != "eof":
            raise self.error(f"unexpected {tok.value!r}", tok)
        return result

    def expr(self) -> MultiPoly:
        result = self.term()
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MultiPoly:
        result = self.unary()
        while True:
            tok = self.current
            if tok.kind == "*":
                self.advance()
                result = result * self.unary()
            elif tok.kind in ("int", "name", "("):
                raise self.error("implicit multiplication is not allowed; use '*'", tok)
            else:
                return result

    def unary(self) -> MultiPoly:
        if self.current.kind == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.current.kind == "^":
            self.advance()
            tok = self.current
            if tok.kind != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            self.advance()
            return base.pow(int(tok.value))
        return base

    def atom(self) -> MultiPoly:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return MultiPoly.constant(self.field, int(tok.value), self.alphabet)
        if tok.kind == "name":
            self.advance()
            if tok.value in self.alphabet.names:
                return MultiPoly.var(self.field, tok.value, self.alphabet)
            if tok.value == "u" and self.field.n > 1:
                return MultiPoly.constant(self.field, self.field.generator(), self.alphabet)
            raise UnknownVariableError(tok.value, tok.offset, self.text)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            if self.current.kind != ")":
                raise self.error("unclosed parenthesis", tok)
            self.advance()
            return inner
        if tok.kind == "eof":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok.value!r}", tok)


def parse_poly(text: str, field: FieldDesc, alphabet: Alphabet = DP1_ALPHABET) -> MultiPoly:
    return _Parser(text, field, alphabet).parse()
