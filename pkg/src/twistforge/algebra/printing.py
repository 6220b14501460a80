"""Canonical text form of polynomials and rational functions.

The output is accepted by :mod:`twistforge.algebra.parse`, so printing then
parsing returns an equal object.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycInt
from .poly import VARIABLES, MultiPoly


def _monomial(exp: tuple[int, ...]) -> str:
    parts = []
    for name, k in zip(VARIABLES, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _coeff_sign_body(c) -> tuple[str, str, bool]:
    """Return (sign, text of |c|, is_one)."""
    if isinstance(c, CycInt):
        if c.is_rational():
            c = c.to_rational()
        else:
            nonzero = [x for x in c.coords if x]
            if len(nonzero) == 1 and nonzero[0] < 0:
                body = str(-c)
                return "-", (body if "+" not in body and " - " not in body else f"({body})"), False
            body = str(c)
            return "+", (body if len(nonzero) == 1 else f"({body})"), False
    c = Fraction(c)
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
    return sign, text, mag == 1


def format_poly(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for exp, c in p.sorted_terms():
        sign, body, is_one = _coeff_sign_body(c)
        mono = _monomial(exp)
        if mono:
            text = mono if is_one else f"{body}*{mono}"
        else:
            text = body
        pieces.append((sign, text))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def _is_atomic_den(p: MultiPoly) -> bool:
    if len(p) != 1:
        return False
    exp, c = next(iter(p.terms.items()))
    return c == 1 and sum(1 for k in exp if k) <= 1


def format_ratfunc(num: MultiPoly, den: MultiPoly) -> str:
    if den == 1:
        return format_poly(num)
    n = format_poly(num)
    if len(num) > 1 or n.startswith("-") or "/" in n or "*" in n:
        n = f"({n})"
    d = format_poly(den)
    if not _is_atomic_den(den):
        d = f"({d})"
    return f"{n}/{d}"
