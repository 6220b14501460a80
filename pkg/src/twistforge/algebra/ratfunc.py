"""Normalized rational functions num/den over Q or Q(zeta_n).

Canonical form: gcd(num, den) = 1 and den is monic for the graded-lex order,
so two rational functions are equal exactly when their (num, den) pairs are.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Mapping, Union

from ..errors import PoleError, ZeroDenominatorError
from .cyclotomic import CycInt
from .poly import VARIABLES, MultiPoly, poly_gcd

Scalar = Union[int, Fraction, CycInt]


class RatFunc:
    """Quotient of two MultiPolys in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = MultiPoly.one(num.field) if den is None else _as_poly(den)
        num, den = _unify(num, den)
        if den.is_zero():
            raise ZeroDenominatorError("denominator is identically zero")
        if num.is_zero():
            self.num, self.den = MultiPoly.zero(num.field), MultiPoly.one(num.field)
            return
        if not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num.divexact(g), den.divexact(g)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = Fraction(1) / lc if den.field is None else lc.inverse()
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def _coprime(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        """Build from a pair already known to be coprime; only fixes the scale."""
        if den.is_zero():
            raise ZeroDenominatorError("denominator is identically zero")
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = MultiPoly.zero(num.field), MultiPoly.one(num.field)
            return obj
        lc = den.leading_coefficient()
        if lc != 1:
            inv = Fraction(1) / lc if den.field is None else lc.inverse()
            num, den = num * inv, den * inv
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def var(cls, name: str, field: int | None = None) -> "RatFunc":
        return cls._coprime(MultiPoly.var(name, field), MultiPoly.one(field))

    @classmethod
    def constant(cls, c: Scalar, field: int | None = None) -> "RatFunc":
        if isinstance(c, CycInt):
            field = c.n
        return cls._coprime(MultiPoly.constant(c, field), MultiPoly.one(field))

    # queries ------------------------------------------------------------------------
    @property
    def field(self) -> int | None:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def variables(self) -> tuple[str, ...]:
        used = set(self.num.variables()) | set(self.den.variables())
        return tuple(v for v in VARIABLES if v in used)

    def lift(self, n: int | None) -> "RatFunc":
        if n == self.field:
            return self
        return RatFunc._coprime(self.num.lift(n), self.den.lift(n))

    # arithmetic -------------------------------------------------------------------------
    def _other(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc._coprime(other, MultiPoly.one(other.field))
        if isinstance(other, (Rational, CycInt)):
            return RatFunc.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._coprime(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if other.is_constant():
            c = other.constant_value()
            if not c:
                return RatFunc.constant(0, _field_of(self, other))
            return RatFunc._coprime(self.num * c, self.den.lift(_field_of(self, other)))
        if self.is_constant():
            return other * self
        # cross-cancel before multiplying keeps the final gcd small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        a, d2 = self.num.divexact(g1), other.den.divexact(g1)
        c, b = other.num.divexact(g2), self.den.divexact(g2)
        return RatFunc._coprime(a * c, b * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDenominatorError("inverse of the zero rational function")
        return RatFunc._coprime(self.den, self.num)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._coprime(self.num ** e, self.den ** e)

    # comparison --------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def __str__(self) -> str:
        from .printing import format_ratfunc

        return format_ratfunc(self.num, self.den)

    # operations ----------------------------------------------------------------------------
    def evaluate(self, point: Mapping[str, object]):
        """Exact value at a point; PoleError if the denominator vanishes there."""
        den = self.den.evaluate(point)
        if not den:
            raise PoleError(f"denominator {self.den} vanishes at {dict(point)}")
        num = self.num.evaluate(point)
        if isinstance(num, CycInt) or isinstance(den, CycInt):
            if not isinstance(num, CycInt):
                num = CycInt(den.n, [num])
            return num / den
        value = Fraction(num) / Fraction(den)
        return value.numerator if value.denominator == 1 else value

    def substitute(self, bindings: Mapping[str, object]) -> "RatFunc":
        return substitute(self, bindings)


def _field_of(a: RatFunc, b: RatFunc) -> int | None:
    return a.field if a.field is not None else b.field


def _as_poly(p) -> MultiPoly:
    if isinstance(p, MultiPoly):
        return p
    if isinstance(p, CycInt):
        return MultiPoly.constant(p, p.n)
    if isinstance(p, Rational):
        return MultiPoly.constant(p)
    raise TypeError(f"expected a polynomial or scalar, got {type(p).__name__}")


def _unify(a: MultiPoly, b: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    fld = a.field if a.field is not None else b.field
    return a.lift(fld), b.lift(fld)


def _as_ratfunc(value, field: int | None = None) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, MultiPoly):
        return RatFunc._coprime(value, MultiPoly.one(value.field))
    if isinstance(value, str):
        from .parse import parse_ratfunc

        return parse_ratfunc(value)
    return RatFunc.constant(value, field)


def ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Canonical form of num/den; raises ZeroDenominatorError for den = 0."""
    return RatFunc(num, den)


def _scaled_variable(r: RatFunc) -> tuple[str, object] | None:
    """If r == c * var for a single variable, return (var, c)."""
    if not r.den.is_constant() or len(r.num) != 1:
        return None
    exp, c = next(iter(r.num.terms.items()))
    if sum(exp) != 1:
        return None
    # the denominator is monic, hence 1 here
    return VARIABLES[exp.index(1)], c


def substitute(f: RatFunc, bindings: Mapping[str, object]) -> RatFunc:
    """Compose f with the given variable images and normalize.

    Bindings for variables that do not occur in f are ignored.
    """
    used = set(f.variables())
    images = {k: _as_ratfunc(v) for k, v in bindings.items() if k in used}
    if not images:
        return f
    fld = f.field
    for img in images.values():
        if img.field is not None:
            if fld is not None and fld != img.field:
                raise ValueError("incompatible cyclotomic fields in substitution")
            fld = img.field
    images = {k: v.lift(fld) for k, v in images.items()}
    num, den = f.num.lift(fld), f.den.lift(fld)

    # an injective rescaling of variables is a ring automorphism: coprimality survives
    scaled = {k: _scaled_variable(v) for k, v in images.items()}
    if all(s is not None for s in scaled.values()):
        targets = [s[0] for s in scaled.values()] + [v for v in used if v not in images]
        if len(set(targets)) == len(targets):
            polys = {k: MultiPoly.monomial({s[0]: 1}, s[1], fld) for k, s in scaled.items()}
            return RatFunc._coprime(num.compose(polys), den.compose(polys))

    if all(v.is_polynomial() for v in images.values()):
        # denominators are monic, so a constant one is exactly 1
        polys = {k: v.num for k, v in images.items()}
        new_den = den.compose(polys)
        if new_den.is_zero():
            raise ZeroDenominatorError("substitution makes the denominator identically zero")
        return RatFunc(num.compose(polys), new_den)

    # clear denominators: p(n/d) * d^E with E the largest degree over num and den
    top = {k: max(num.degree(k), den.degree(k), 0) for k in images}
    new_num = _homogenized_compose(num, images, top, fld)
    new_den = _homogenized_compose(den, images, top, fld)
    if new_den.is_zero():
        raise ZeroDenominatorError("substitution makes the denominator identically zero")
    return RatFunc(new_num, new_den)


def _homogenized_compose(p: MultiPoly, images: Mapping[str, RatFunc], top: Mapping[str, int], fld) -> MultiPoly:
    names = list(images)
    idx = [VARIABLES.index(k) for k in names]
    npow: dict = {}
    dpow: dict = {}

    def pw(cache, key, base, k):
        if (key, k) not in cache:
            cache[(key, k)] = base ** k
        return cache[(key, k)]

    total = MultiPoly.zero(fld)
    for exp, c in p.terms.items():
        rest = list(exp)
        term = None
        for name, i in zip(names, idx):
            k = exp[i]
            rest[i] = 0
            img = images[name]
            piece = pw(npow, name, img.num, k) * pw(dpow, name, img.den, top[name] - k)
            term = piece if term is None else term * piece
        mono = MultiPoly({tuple(rest): c}, fld)
        total = total + mono * term
    return total


def evaluate(f: RatFunc, point: Mapping[str, object]):
    return f.evaluate(point)


def apply_root_automorphism(f: RatFunc, j: int) -> RatFunc:
    """Apply zeta_n -> zeta_n^j to every coefficient of f."""
    n = f.field
    if n is None:
        return f
    if gcd(j, n) != 1:
        raise ValueError(f"exponent {j} is not coprime to the conductor {n}")
    return RatFunc._coprime(
        f.num.map_coefficients(lambda c: c.galois(j)),
        f.den.map_coefficients(lambda c: c.galois(j)),
    )
