"""Cyclotomic polynomials and exact arithmetic in Z[zeta_n] / Q(zeta_n).

An element is stored as its residue modulo the n-th cyclotomic polynomial,
i.e. as phi(n) coordinates on the power basis 1, zeta, ..., zeta^(phi(n)-1).
Coordinates are Python ints for elements of Z[zeta_n] (Jacobi sums) and may
be Fractions when the element lives in the field.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

from . import upoly


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = upoly.divexact_int(poly, cyclotomic_coeffs(d))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


def cyclotomic_polynomial(n: int):
    """Phi_n as a MultiPoly in x over the rationals."""
    from .poly import MultiPoly

    return MultiPoly.from_univariate(cyclotomic_coeffs(n), "x")


@lru_cache(maxsize=None)
def _zeta_powers(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta_n^e for e = 0..n-1."""
    phi = euler_phi(n)
    mod = cyclotomic_coeffs(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        nxt = [0] + cur
        cur = upoly.reduce_monic(nxt, mod) if len(nxt) > phi else nxt
        cur = cur + [0] * (phi - len(cur))
    return tuple(rows)


def _units(n: int) -> list[int]:
    return [j for j in range(1, n + 1) if gcd(j, n) == 1]


class CycInt:
    """Element of Z[zeta_n] (or Q(zeta_n) with rational coordinates)."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Iterable = ()):
        phi = euler_phi(n)
        c = list(coords)
        if len(c) > phi:
            c = upoly.reduce_monic(c, cyclotomic_coeffs(n))
        c = c + [0] * (phi - len(c))
        self.n = n
        self.coords = tuple(_simplify(x) for x in c)

    # constructors -------------------------------------------------------
    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "CycInt":
        return cls(n, _zeta_powers(n)[power % n])

    @classmethod
    def from_rational(cls, n: int, value) -> "CycInt":
        return cls(n, [value])

    @classmethod
    def from_exponent_counts(cls, n: int, counts: Sequence[int]) -> "CycInt":
        """Sum of counts[e] * zeta_n^e for e = 0..n-1."""
        table = _zeta_powers(n)
        acc = [0] * euler_phi(n)
        for e, c in enumerate(counts):
            if c:
                row = table[e % n]
                for i, r in enumerate(row):
                    if r:
                        acc[i] += c * r
        return cls(n, acc)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coords)

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational number")
        return self.coords[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.n != self.n:
                raise ValueError(f"cannot mix Q(zeta_{self.n}) and Q(zeta_{other.n})")
            return other
        if isinstance(other, Rational):
            return CycInt(self.n, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.n, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.n, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            c = other.coords[0]
            return CycInt(self.n, [a * c for a in self.coords])
        if self.is_rational():
            c = self.coords[0]
            return CycInt(self.n, [c * b for b in other.coords])
        prod = [0] * (2 * len(self.coords) - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return CycInt(self.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycInt":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycInt(self.n, [1 / Fraction(self.coords[0])])
        g, s, _ = upoly.gcdex(self.coords, cyclotomic_coeffs(self.n))
        if len(g) != 1:
            raise ArithmeticError("element not invertible modulo Phi_n")
        return CycInt(self.n, s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycInt(self.n, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # Galois action --------------------------------------------------------
    def galois(self, j: int) -> "CycInt":
        """Image under zeta_n -> zeta_n^j (gcd(j, n) = 1)."""
        if gcd(j, self.n) != 1:
            raise ValueError(f"exponent {j} is not coprime to {self.n}")
        table = _zeta_powers(self.n)
        acc = [0] * len(self.coords)
        for i, a in enumerate(self.coords):
            if a:
                for r, val in enumerate(table[(i * j) % self.n]):
                    if val:
                        acc[r] += a * val
        return CycInt(self.n, acc)

    def conjugate(self) -> "CycInt":
        return self.galois(-1)

    def norm(self):
        """Product of all Galois conjugates, a rational number."""
        prod = CycInt(self.n, [1])
        for j in _units(self.n):
            prod = prod * self.galois(j)
        return prod.to_rational()

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, CycInt):
            return self.n == other.n and self.coords == other.coords
        if isinstance(other, Rational):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.n, self.coords))

    def __repr__(self) -> str:
        return f"CycInt({self.n}, {list(self.coords)})"

    def __str__(self) -> str:
        parts = []
        for i in range(len(self.coords) - 1, -1, -1):
            c = self.coords[i]
            if not c:
                continue
            mono = "" if i == 0 else (f"zeta{self.n}" if i == 1 else f"zeta{self.n}^{i}")
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _simplify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def cyc_conjugate(z: CycInt) -> CycInt:
    return z.conjugate()


def cyc_norm(z: CycInt):
    """Norm from Q(zeta_n) to Q as the product of the Galois conjugates."""
    value = z.norm()
    return _simplify(Fraction(value))


def cyc_norm_resultant(z: CycInt):
    """Independent norm oracle: res(Phi_n, representative of z)."""
    value = upoly.resultant(cyclotomic_coeffs(z.n), upoly.trim(z.coords))
    return _simplify(value)
