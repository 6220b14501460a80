"""Function fields Q(x)[y]/(y^n - h(x)) of curves y^n = h(x).

Elements are stored as n coefficients c_0..c_{n-1} (RatFuncs in x) of
1, y, ..., y^(n-1).  Only monomials c * y^e are inverted, which is all the
birational maps in this package need once y^n has been reduced away.
"""
from __future__ import annotations

from typing import Sequence

from .ratfunc import RatFunc

_X = "x"


class CurveFunctionField:
    def __init__(self, n: int, h: RatFunc, label: str = ""):
        if n < 2:
            raise ValueError("y-degree must be at least 2")
        if set(h.variables()) - {_X}:
            raise ValueError("h must be a function of x alone")
        self.n = n
        self.h = h
        self.label = label or f"y^{n} = {h}"

    def __repr__(self) -> str:
        return f"CurveFunctionField({self.label!r})"

    def element(self, coeffs: Sequence) -> "FFElement":
        cs = [c if isinstance(c, RatFunc) else RatFunc.constant(c) for c in coeffs]
        if len(cs) > self.n:
            raise ValueError("too many coefficients")
        cs += [RatFunc.constant(0)] * (self.n - len(cs))
        return FFElement(self, tuple(cs))

    def const(self, c) -> "FFElement":
        return self.element([c])

    def x(self) -> "FFElement":
        return self.element([RatFunc.var(_X)])

    def y(self) -> "FFElement":
        return self.element([0, 1])


class FFElement:
    __slots__ = ("K", "coeffs")

    def __init__(self, K: CurveFunctionField, coeffs: tuple[RatFunc, ...]):
        self.K = K
        self.coeffs = coeffs

    def _lift(self, other) -> "FFElement":
        if isinstance(other, FFElement):
            if other.K is not self.K:
                raise ValueError("elements of different function fields")
            return other
        return self.K.const(other) if not isinstance(other, RatFunc) else self.K.element([other])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        o = self._lift(other)
        return FFElement(self.K, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.K, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        n, h = self.K.n, self.K.h
        acc = [RatFunc.constant(0)] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                if b.is_zero():
                    continue
                e = i + j
                term = a * b
                if e >= n:
                    e -= n
                    term = term * h
                acc[e] = acc[e] + term
        return FFElement(self.K, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.K.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FFElement":
        live = [(e, c) for e, c in enumerate(self.coeffs) if not c.is_zero()]
        if not live:
            raise ZeroDivisionError("inverse of zero")
        if len(live) > 1:
            raise ValueError("only monomials c*y^e can be inverted here")
        e, c = live[0]
        if e == 0:
            return self.K.element([c.inverse()])
        # (c y^e)^-1 = y^(n-e) / (c h)
        out = [RatFunc.constant(0)] * self.K.n
        out[self.K.n - e] = (c * self.K.h).inverse()
        return FFElement(self.K, tuple(out))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FFElement):
            other = self._lift(other)
        return other.K is self.K and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for e, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if e == 0 else ("y" if e == 1 else f"y^{e}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FFElement({self})"
