"""Recursive-descent parser for polynomial and curve text.

Expression grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' ['-'] INT]
    atom   := INT | VAR | 'zeta' INT | '(' expr ')'

Variables are u, v, w, t, x.  ``zeta<n>`` denotes a primitive n-th root of
unity and switches the coefficient field to Q(zeta_n).
"""
from __future__ import annotations

import re

from ..errors import ParseError, SemanticError
from .cyclotomic import CycInt
from .poly import VARIABLES, MultiPoly
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(zeta)(\d+)|(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    text = text.replace("−", "-").replace("**", "^")
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("zeta", int(m.group(2)), start))
        elif m.group(3):
            tokens.append(("int", int(m.group(3)), start))
        elif m.group(4):
            name = m.group(4)
            if name not in VARIABLES:
                raise ParseError(f"unknown identifier {name!r}", text, start)
            tokens.append(("var", name, start))
        else:
            ch = m.group(5)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.field: int | None = None

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> RatFunc:
        if self.peek() == "end":
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        self.take("end")
        return value

    def expr(self) -> RatFunc:
        if self.peek() == "-":
            self.i += 1
            value = -self.term()
        else:
            if self.peek() == "+":
                self.i += 1
            value = self.term()
        while self.peek() in "+-":
            op = self.take(self.peek())[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op, _, pos = self.take(self.peek())
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", self.text, pos)
                value = value / rhs
        return value

    def factor(self) -> RatFunc:
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            sign = 1
            if self.peek() == "-":
                self.i += 1
                sign = -1
            _, e, pos = self.take("int")
            if sign < 0 and base.is_zero():
                raise ParseError("zero raised to a negative power", self.text, pos)
            base = base ** (sign * e)
        return base

    def atom(self) -> RatFunc:
        kind, val, pos = self.tokens[self.i]
        if kind == "int":
            self.i += 1
            return RatFunc.constant(val)
        if kind == "var":
            self.i += 1
            return RatFunc.var(val)
        if kind == "zeta":
            self.i += 1
            if val < 1:
                raise ParseError("zeta needs a positive conductor", self.text, pos)
            if self.field is not None and self.field != val:
                raise ParseError(f"cannot mix zeta{self.field} and zeta{val}", self.text, pos)
            self.field = val
            return RatFunc.constant(CycInt.zeta(val))
        if kind == "(":
            self.i += 1
            value = self.expr()
            self.take(")")
            return value
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", self.text, pos)


def parse_ratfunc(text: str) -> RatFunc:
    return _Parser(text).parse()


def parse_poly(text: str) -> MultiPoly:
    """Parse a polynomial; rational coefficients such as 1/2 are allowed."""
    r = parse_ratfunc(text)
    if not r.den.is_constant():
        raise ParseError("expression is not a polynomial", text, -1)
    return r.num


_CURVE_KEYS = ("p", "m", "k", "a", "form")


def parse_curve(text: str):
    """Parse ``"p=7 m=1 k=2 a=4 form=minus"`` into a SuperCurve.

    ``k`` defaults to 1 and ``form`` to minus.
    """
    from ..ff.curve import Form, SuperCurve

    fields: dict[str, str] = {}
    for m in re.finditer(r"\S+", text):
        item, pos = m.group(0), m.start()
        if "=" not in item:
            raise ParseError(f"expected key=value, found {item!r}", text, pos)
        key, _, value = item.partition("=")
        if key not in _CURVE_KEYS:
            raise ParseError(f"unknown key {key!r}", text, pos)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", text, pos)
        if key != "form" and not re.fullmatch(r"[-+]?\d+", value):
            raise ParseError(f"{key} must be an integer", text, pos + len(key) + 1)
        fields[key] = value
    for key in ("p", "m", "a"):
        if key not in fields:
            raise ParseError(f"missing key {key!r}", text, len(text))
    form = fields.get("form", "minus").lower()
    if form not in ("plus", "minus"):
        raise SemanticError("form", f"form must be plus or minus, got {form!r}")
    return SuperCurve(
        p=int(fields["p"]),
        m=int(fields["m"]),
        k=int(fields.get("k", 1)),
        a=int(fields["a"]),
        form=Form.PLUS if form == "plus" else Form.MINUS,
    )
