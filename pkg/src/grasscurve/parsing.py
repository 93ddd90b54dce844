"""Parser for polynomial and rational-function strings.

Grammar (whitespace insignificant, ``*`` optional between factors)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/' | <juxtaposition>) unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

``a/b`` with integer literals gives a rational coefficient.  Polynomial
targets only allow division by nonzero constants.
"""

from __future__ import annotations

import re

from .arith import HomoPoly, Poly, Q, RatFun
from .arith.scalar import ONE, ZERO

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, where: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.where = where
        loc = []
        if where:
            loc.append(where)
        if line is not None:
            loc.append(f"line {line}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num), start + 1))
        elif name is not None:
            out.append(("var", name, start + 1))
        else:
            out.append(("op", "^" if op == "**" else op, start + 1))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Bivariate:
    """Sparse polynomials in s, t as {(i, j): coeff}."""

    variables = {"s": (1, 0), "t": (0, 1)}

    def const(self, c):
        return {(0, 0): Q(c)} if c else {}

    def var(self, name):
        return {self.variables[name]: ONE}

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, ZERO) + v
        return {k: v for k, v in out.items() if v}

    def neg(self, a):
        return {k: -v for k, v in a.items()}

    def mul(self, a, b):
        out = {}
        for (i, j), u in a.items():
            for (k, l), v in b.items():
                key = (i + k, j + l)
                out[key] = out.get(key, ZERO) + u * v
        return {k: v for k, v in out.items() if v}

    def div(self, a, b):
        if any(k != (0, 0) for k in b) or not b:
            raise ValueError("division by a non-constant polynomial" if b else "division by zero")
        c = ONE / b[(0, 0)]
        return {k: v * c for k, v in a.items()}

    def power(self, a, n):
        out = {(0, 0): ONE}
        for _ in range(n):
            out = self.mul(out, a)
        return out


class _Affine:
    """Rational functions in x."""

    allow_general_division = True

    def const(self, c):
        return RatFun.constant(c)

    def var(self, name):
        return RatFun.x()

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b.is_zero():
            raise ValueError("division by zero")
        if not self.allow_general_division and not (b.is_poly() and b.num.is_constant()):
            raise ValueError("division by a non-constant polynomial")
        return a / b

    def power(self, a, n):
        return a ** n


class _AffinePoly(_Affine):
    allow_general_division = False


class _Parser:
    def __init__(self, text: str, algebra, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.alg = algebra
        self.variables = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, column=tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = self.alg.add(value, rhs if op == "+" else self.alg.neg(rhs))
        return value

    def _starts_factor(self, tok):
        return tok[0] in ("num", "var") or (tok[0] == "op" and tok[1] == "(")

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    value = self.alg.mul(value, rhs)
                else:
                    try:
                        value = self.alg.div(value, rhs)
                    except (ValueError, ZeroDivisionError) as exc:
                        self.fail(str(exc), tok)
            elif self._starts_factor(tok):
                value = self.alg.mul(value, self.power())
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            v = self.unary()
            return self.alg.neg(v) if tok[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer", tok)
            base = self.alg.power(base, tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.alg.const(val)
        if kind == "var":
            if val not in self.variables:
                allowed = ", ".join(sorted(self.variables))
                self.fail(f"unknown variable {val!r} (expected {allowed})", tok)
            return self.alg.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.fail("expected ')'", close)
            return inner
        self.fail("expected a number, variable or '('", tok)


def parse_form(text: str) -> HomoPoly:
    """Parse a homogeneous polynomial in s, t."""
    terms = _Parser(text, _Bivariate(), ("s", "t")).parse()
    try:
        return HomoPoly.from_terms(terms)
    except ValueError:
        raise ParseError(f"{text!r} is not homogeneous in s, t") from None


def parse_bivariate(text: str) -> dict:
    """Parse a polynomial in s, t into {(i, j): coeff} without a homogeneity check."""
    return _Parser(text, _Bivariate(), ("s", "t")).parse()


def parse_poly(text: str) -> Poly:
    """Parse a univariate polynomial in x."""
    r = _Parser(text, _AffinePoly(), ("x",)).parse()
    return r.num


def parse_ratfun(text: str) -> RatFun:
    """Parse a rational function in x."""
    return _Parser(text, _Affine(), ("x",)).parse()
