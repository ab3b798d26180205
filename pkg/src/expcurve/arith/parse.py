"""Parser for the expression grammar used in map strings and CLI input.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor | factor)*     # juxtaposition multiplies
    factor := ('+' | '-') factor | power
    power  := atom (('^' | '**') integer)?
    atom   := integer | variable | 'I' | '(' expr ')'

``I`` is the imaginary unit.  Example: ``(v/2)*(u-13)/(u^2+u-74)``.
"""

from __future__ import annotations

import re

from .bivariate import BivariatePolynomial
from .numbers import GaussianRational
from .ratfunc import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.replace("−", "-")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, vars):
        self.vars = tuple(vars)
        self.toks = []
        for kind, val in _tokenize(text):
            # "xy" means x*y when every letter is a variable name
            if kind == "name" and val not in self.vars and val != "I" and all(ch in self.vars for ch in val):
                self.toks.extend(("name", ch) for ch in val)
            else:
                self.toks.append((kind, val))
        self.i = 0
        self.gens = RationalFunction.gens(self.vars)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, got {t[1]!r}")

    def parse(self):
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            r = self.term()
            v = v + r if op == "+" else v - r
        return v

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t in (("op", "*"), ("op", "/")):
                self.take()
                r = self.factor()
                v = v * r if t[1] == "*" else v / r
            elif t[0] in ("num", "name") or t == ("op", "("):
                v = v * self.factor()
            else:
                return v

    def factor(self):
        t = self.peek()
        if t == ("op", "-"):
            self.take()
            return -self.factor()
        if t == ("op", "+"):
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer literal")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return RationalFunction(BivariatePolynomial.const(val, self.vars))
        if kind == "name":
            if val == self.vars[0]:
                return self.gens[0]
            if val == self.vars[1]:
                return self.gens[1]
            if val == "I":
                return RationalFunction(BivariatePolynomial.const(GaussianRational(0, 1), self.vars))
            raise ParseError(f"unknown variable {val!r} (expected one of {self.vars})")
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r}")


def parse_rational(text: str, vars=("x", "y")) -> RationalFunction:
    return _Parser(text, vars).parse()


def parse_polynomial(text: str, vars=("x", "y")) -> BivariatePolynomial:
    r = parse_rational(text, vars)
    if not r.is_polynomial():
        raise ParseError("expression is not a polynomial")
    return r.as_polynomial().with_vars(vars)
