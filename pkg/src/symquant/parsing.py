"""Parser for commutative polynomial expressions over a relation system.

Grammar (implicit multiplication by juxtaposition is allowed)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := rational | name | '(' expr ')'

Names resolve to generators of B (or of T when ``extended=True``) or to
central parameters, which become polynomial coefficients. Every input is
read on the classical side; noncommutative operators only ever arise
through symmetrization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coeffs import CoeffPoly
from .cpoly import CPoly
from .errors import ParseError
from .relations import RelationSystem

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[start]!r}", src, start)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, gens: tuple[str, ...], params: tuple[str, ...]):
        self.src = src
        self.gens = gens
        self.params = params
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, self.src, tok.pos)

    def take(self, text: str | None = None) -> Token:
        tok = self.tok
        if text is not None and tok.text != text:
            found = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        self.i += 1
        return tok

    def parse(self) -> CPoly:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        out = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return out

    def expr(self) -> CPoly:
        out = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or t.text == "("

    def term(self) -> CPoly:
        out = self.factor()
        while True:
            if self.tok.text == "*":
                self.take()
                out = out * self.factor()
            elif self._starts_atom():
                out = out * self.factor()
            else:
                return out

    def factor(self) -> CPoly:
        if self.tok.text == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.tok.text == "^":
            self.take()
            if self.tok.text == "-":
                raise self.error("negative exponent")
            tok = self.take()
            if tok.kind != "num" or "/" in tok.text:
                raise self.error("exponent must be a non-negative integer", tok)
            return base ** int(tok.text)
        return base

    def atom(self) -> CPoly:
        tok = self.tok
        if tok.kind == "num":
            self.take()
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise self.error("zero denominator", tok)
            value = Fraction(int(num), int(den)) if den else Fraction(int(num))
            return CPoly.constant(value, self.gens)
        if tok.kind == "name":
            self.take()
            if tok.text in self.gens:
                return CPoly.gen(self.gens.index(tok.text), self.gens)
            if tok.text in self.params:
                return CPoly.constant(CoeffPoly.param(self.params.index(tok.text), self.params),
                                      self.gens)
            raise self.error(f"unknown identifier {tok.text!r}", tok)
        if tok.text == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_expr(src: str, rel: RelationSystem, extended: bool = False) -> CPoly:
    """Parse ``src`` into a CPoly over B (over T when ``extended``)."""
    gens = rel.letters if extended else rel.generators
    return _Parser(src, gens, rel.central_params).parse()


def parse_coeff(src: str, params: tuple[str, ...]):
    """Parse a coefficient expression over central parameters only."""
    p = _Parser(src, (), params).parse()
    return p.terms.get((), Fraction(0))
