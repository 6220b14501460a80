"""Zeta numerators P_l(T) of y^p = x^m (a - x)^k and derived invariants.

Two independent routes:

* :func:`zeta_numerator_newton` counts points over F_{l^j}, j = 1..g, and
  recovers P from the power sums with Newton's identities and the functional
  equation;
* :func:`zeta_numerator_jacobi` multiplies one factor (1 - chi^{m+k}(a) tau T^f)
  per orbit of characters under chi -> chi^l, with tau a Jacobi sum over
  F_{l^f}, f the order of l mod p.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from sympy import n_order

from ..algebra.cyclotomic import CycInt
from ..errors import FieldTooLargeError, InvalidParameterError
from .counting import _jacobi_histogram, character_exponent, count_points
from .curve import SuperCurve
from .fields import ENUMERATION_LIMIT, field


@dataclass(frozen=True)
class ZetaReport:
    curve: SuperCurve
    l: int
    method: str
    good_reduction: bool
    counts: tuple[int, ...]
    power_sums: tuple[int, ...]
    symmetric: tuple[int, ...]
    P_coeffs: tuple[int, ...]
    jacobian_order: int
    slopes: tuple[Fraction, ...] = dc_field(default=())

    @property
    def genus(self) -> int:
        return self.curve.genus

    def functional_equation_holds(self) -> bool:
        g, s = self.genus, self.symmetric
        return all(s[2 * g - i] == self.l ** (g - i) * s[i] for i in range(g + 1))

    def slopes_symmetric(self) -> bool:
        return sorted(self.slopes) == sorted(1 - x for x in self.slopes) and sum(self.slopes) == self.genus

    def is_ordinary(self) -> bool:
        return all(x in (0, 1) for x in self.slopes)

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "l": self.l,
            "method": self.method,
            "good_reduction": self.good_reduction,
            "counts": list(self.counts),
            "power_sums": list(self.power_sums),
            "symmetric": list(self.symmetric),
            "P_coeffs": list(self.P_coeffs),
            "jacobian_order": self.jacobian_order,
            "slopes": [str(x) for x in self.slopes],
            "ordinary": self.is_ordinary(),
        }


# Newton identities -------------------------------------------------------------------

def symmetric_from_power_sums(t: Sequence[int]) -> list[int]:
    """e_0..e_n from power sums p_1..p_n via k e_k = sum (-1)^(i-1) e_(k-i) p_i."""
    e = [1]
    for k in range(1, len(t) + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * t[i - 1] for i in range(1, k + 1))
        if acc % k:
            raise AssertionError(f"Newton identity produced a non-integer at k={k}")
        e.append(acc // k)
    return e


def power_sums_from_symmetric(e: Sequence[int], n: int) -> list[int]:
    """p_1..p_n from e_0..e_n (e_0 = 1)."""
    p: list[int] = []
    for k in range(1, n + 1):
        acc = k * e[k] - sum((-1) ** (i - 1) * e[k - i] * p[i - 1] for i in range(1, k))
        p.append((-1) ** (k - 1) * acc)
    return p


def _complete(curve: SuperCurve, l: int, method: str, s_low: Sequence[int], counts, t) -> ZetaReport:
    g = curve.genus
    s = list(s_low[: g + 1]) + [0] * g
    for i in range(g):
        s[2 * g - i] = l ** (g - i) * s[i]
    coeffs = tuple((-1) ** i * s[i] for i in range(2 * g + 1))
    return ZetaReport(
        curve=curve,
        l=l,
        method=method,
        good_reduction=True,
        counts=tuple(counts),
        power_sums=tuple(t),
        symmetric=tuple(s),
        P_coeffs=coeffs,
        jacobian_order=sum(coeffs),
        slopes=tuple(newton_polygon_slopes(coeffs, l)),
    )


def zeta_numerator_newton(curve: SuperCurve, l: int) -> ZetaReport:
    curve.require_good_reduction(l)
    g = curve.genus
    counts = [count_points(curve, field(l, j)) for j in range(1, g + 1)]
    t = [l**j + 1 - n for j, n in enumerate(counts, start=1)]
    s = symmetric_from_power_sums(t)
    return _complete(curve, l, "newton", s, counts, t)


# Jacobi-sum route ---------------------------------------------------------------------------

def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def semi_primitive_sign(l: int, s: int, p: int) -> int:
    """Sign eps with Gauss sums over F_{l^(2s)} equal to eps * l^s when l^s = -1 mod p."""
    if l == 2:
        return 1
    return -1 if ((l**s + 1) // p) % 2 else 1


def semi_primitive_numerator(p: int, l: int) -> list[int]:
    """P_l(T) when l^s = -1 mod p (s = ord_p(l)/2).

    Then every Jacobi sum of order p over F_{l^(2s)} equals eps * l^s, and
    elements of F_l are p-th powers there, so each factor is 1 + eps l^s T^(2s).
    """
    f = int(n_order(l, p))
    if f % 2:
        raise InvalidParameterError(f"{l} has odd order {f} mod {p}; not semi-primitive")
    s = f // 2
    eps = semi_primitive_sign(l, s, p)
    base = [1] + [0] * (2 * s - 1) + [eps * l**s]
    coeffs = [1]
    for _ in range((p - 1) // (2 * s)):
        coeffs = _poly_mul(coeffs, base)
    return coeffs


def zeta_numerator_jacobi(curve: SuperCurve, l: int) -> ZetaReport:
    curve.require_good_reduction(l)
    c = curve.to_minus()
    p, g = c.p, c.genus
    f = int(n_order(l, p))
    q = l**f
    if q <= ENUMERATION_LIMIT:
        F = field(l, f)
        hist = _jacobi_histogram(p, c.m, c.k, l, f)
        ea = character_exponent(c.a, F, p)
        seen: set[int] = set()
        P: list = [1]
        for j in range(1, p):
            if j in seen:
                continue
            orbit = {j * l**i % p for i in range(f)}
            seen |= orbit
            counts = [0] * p
            shift = j * (c.m + c.k) * ea
            for e, h in enumerate(hist):
                if h:
                    counts[(j * e + shift) % p] -= h
            coeff = CycInt.from_exponent_counts(p, counts)  # chi^{m+k}(a) * tau_j
            factor = [1] + [0] * (f - 1) + [-coeff]
            P = _poly_mul(P, factor)
        coeffs = []
        for x in P:
            if isinstance(x, CycInt):
                if not (x.is_rational() and x.is_integral()):
                    raise AssertionError(f"zeta numerator coefficient {x} is not a rational integer")
                x = int(x.to_rational())
            coeffs.append(int(x))
        method = "jacobi"
    elif f % 2 == 0:
        coeffs = semi_primitive_numerator(p, l)
        method = "jacobi-semiprimitive"
    else:
        raise FieldTooLargeError(f"F_{l}^{f} exceeds the enumeration limit and l is not semi-primitive mod {p}")
    if len(coeffs) != 2 * g + 1:
        raise AssertionError("zeta numerator has the wrong degree")
    s_all = [(-1) ** i * x for i, x in enumerate(coeffs)]
    t = power_sums_from_symmetric(s_all, g)
    counts = [l**j + 1 - tj for j, tj in enumerate(t, start=1)]
    report = _complete(curve, l, method, s_all, counts, t)
    if list(report.P_coeffs) != coeffs:
        raise AssertionError("Jacobi-sum product violates the functional equation")
    return report


def zeta_report(curve: SuperCurve, l: int, method: str = "auto") -> ZetaReport:
    if method == "newton":
        return zeta_numerator_newton(curve, l)
    if method == "jacobi":
        return zeta_numerator_jacobi(curve, l)
    if method != "auto":
        raise InvalidParameterError(f"unknown zeta method {method!r}")
    try:
        return zeta_numerator_jacobi(curve, l)
    except FieldTooLargeError:
        return zeta_numerator_newton(curve, l)


def jacobian_order(curve: SuperCurve, l: int, method: str = "auto") -> int:
    return zeta_report(curve, l, method).jacobian_order


# Newton polygon ---------------------------------------------------------------------------------

def _valuation(n: int, l: int) -> int:
    n = abs(n)
    v = 0
    while n % l == 0:
        n //= l
        v += 1
    return v


def newton_polygon_slopes(coeffs: Sequence[int], l: int) -> list[Fraction]:
    """Slopes of the lower convex hull of (i, v_l(c_i)), each repeated by its length."""
    pts = [(i, _valuation(c, l)) for i, c in enumerate(coeffs) if c]
    if not pts:
        return []
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point if it lies on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes += [Fraction(y2 - y1, x2 - x1)] * (x2 - x1)
    return slopes
