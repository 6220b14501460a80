"""Parametric twists with rational points, and their exact verification.

Each builder returns a :class:`TwistConstruction`: the twisting function D,
the auxiliary functions it is assembled from, points with coordinates in the
rational function field, and the twisted curves those points should lie on.
Nothing is trusted: :func:`verify_on_curve` substitutes every point into its
curve and checks that the residual normalizes to zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .algebra.cyclotomic import CycInt
from .algebra.poly import MultiPoly, poly_gcd
from .algebra.ratfunc import RatFunc, substitute
from .errors import DegeneracyError, InvalidParameterError


class Kind(str, Enum):
    Q2_M_M = "Q2_M_M"
    Q2_2M_2M = "Q2_2M_2M"
    M_M_2M = "M_M_2M"
    P_TWIST_PRODUCT = "P_TWIST_PRODUCT"
    P_TWIST_ADDITIVE = "P_TWIST_ADDITIVE"
    EXAMPLE_2_M_2M = "EXAMPLE_2_M_2M"


@dataclass(frozen=True)
class HyperParams:
    """Data of the three curves y^2 = f(x), y^2 = x^m + b, y^2 = x^m + c."""

    f: MultiPoly | None
    m: int
    b: int = 1
    c: int = 1
    a: int = 1

    @property
    def n(self) -> int:
        return (self.m - 1) // 2

    def validate(self, need_f: bool = True) -> None:
        if self.m < 3 or self.m % 2 == 0:
            raise InvalidParameterError(f"m must be odd and >= 3, got {self.m}")
        for name in ("a", "b", "c"):
            if getattr(self, name) == 0:
                raise InvalidParameterError(f"{name} must be nonzero")
        if need_f:
            check_squarefree(self.f, min_degree=3)


def check_squarefree(f: MultiPoly | None, min_degree: int = 1) -> None:
    if f is None:
        raise InvalidParameterError("a polynomial f in x is required")
    if any(v != "x" for v in f.variables()):
        raise InvalidParameterError(f"f must be a polynomial in x alone, got {f}")
    if f.degree("x") < min_degree:
        raise InvalidParameterError(f"f must have degree >= {min_degree}, got {f}")
    if not poly_gcd(f, f.derivative("x")).is_constant():
        raise InvalidParameterError(f"f = {f} has a repeated factor")


@dataclass(frozen=True)
class Point:
    label: str
    x: RatFunc
    y: RatFunc


@dataclass(frozen=True)
class CurveEquation:
    """lhs * y^y_exp = sum(c * x^i for i, c in rhs)."""

    label: str
    lhs: RatFunc
    y_exp: int
    rhs: tuple[tuple[int, RatFunc], ...]

    def residual(self, x: RatFunc, y: RatFunc) -> RatFunc:
        total = self.lhs * y ** self.y_exp
        for i, c in self.rhs:
            total = total - c * x ** i
        return total

    def specialize(self, point: Mapping[str, object]) -> "NumericCurve":
        return NumericCurve(
            self.label,
            self.lhs.evaluate(point),
            self.y_exp,
            tuple((i, c.evaluate(point)) for i, c in self.rhs),
        )


@dataclass(frozen=True)
class NumericCurve:
    label: str
    lhs: object
    y_exp: int
    rhs: tuple[tuple[int, object], ...]

    def contains(self, x, y) -> bool:
        return self.lhs * y ** self.y_exp == sum(c * x ** i for i, c in self.rhs)


@dataclass(frozen=True)
class TwistConstruction:
    kind: Kind
    parameters: dict
    D: RatFunc
    T: RatFunc
    p: RatFunc | None
    q: RatFunc | None
    points: tuple[Point, ...]
    curves: tuple[CurveEquation, ...]
    # named expressions that the underlying system requires to be nonzero
    factors: tuple[tuple[str, RatFunc], ...] = field(default=())


def _x_poly(coeffs: Sequence[tuple[int, RatFunc]]) -> tuple[tuple[int, RatFunc], ...]:
    return tuple((i, c) for i, c in coeffs if not c.is_zero())


def _f_terms(f: MultiPoly) -> tuple[tuple[int, RatFunc], ...]:
    return tuple(sorted((e[4], RatFunc.constant(c)) for e, c in f.terms.items()))


def _f_at(f: MultiPoly, var: str) -> RatFunc:
    return RatFunc(f.compose({"x": MultiPoly.var(var)}))


_u, _v, _w, _t = (RatFunc.var(s) for s in "uvwt")
_ONE = RatFunc.constant(1)


def build_q2_m_m(params: HyperParams) -> TwistConstruction:
    """Quadratic twist of y^2 = f(x) and m-twists of y^2 = x^m + b, x^m + c."""
    params.validate()
    m, n, b, c = params.m, params.n, params.b, params.c
    fu = _f_at(params.f, "u")
    v2m = _v ** (2 * m)
    T = 4 * _w**2 * v2m * fu / (
        v2m**2 * _w**4 - 2 * v2m * (b * v2m + c) * _w**2 + (b * v2m - c) ** 2
    )
    p = ((b + _w**2) * v2m - c) / (2 * _w * v2m)
    q = ((b - _w**2) * v2m - c) / (2 * _w * _v**m)
    D = fu * T ** (m - 1)
    Dm1 = D ** (m - 1)
    points = (
        Point("P1", _u, T ** (-n)),
        Point("P2", fu * T ** (m - 2) / _v**2, fu**n * p * T ** (n * (m - 1))),
        Point("P3", fu * T ** (m - 2), fu**n * q * T ** (n * (m - 1))),
    )
    curves = (
        CurveEquation("D*y^2 = f(x)", D, 2, _f_terms(params.f)),
        CurveEquation("y^2 = x^m + b*D^(m-1)", _ONE, 2, _x_poly([(m, _ONE), (0, b * Dm1)])),
        CurveEquation("y^2 = x^m + c*D^(m-1)", _ONE, 2, _x_poly([(m, _ONE), (0, c * Dm1)])),
    )
    # the proof's system: x1=u, x2=1/(v^2 T), x3=T^-n, y1=1/T, y2=p, y3=q
    sys_x = (_u, 1 / (_v**2 * T), T ** (-n))
    sys_y = (1 / T, p, q)
    factors = _xy_factors(sys_x, sys_y) + (
        ("f(x1)", fu),
        ("y2^2 - b", p**2 - b),
        ("y3^2 - c", q**2 - c),
    )
    return TwistConstruction(Kind.Q2_M_M, _param_dict(params), D, T, p, q, points, curves, factors)


def build_q2_2m_2m(params: HyperParams) -> TwistConstruction:
    """Quadratic twist of y^2 = f(x) and 2m-twists of y^2 = x^m + b, x^m + c."""
    params.validate()
    m, n, b, c = params.m, params.n, params.b, params.c
    fu = _f_at(params.f, "u")
    v2m = _v ** (2 * m)
    p = (v2m * _w**2 - fu * (c - b * v2m)) / (2 * v2m * _w)
    q = (-v2m * _w**2 - fu * (c - b * v2m)) / (2 * _v**m * _w)
    T = p**2 - b * fu
    D = fu * T ** (m - 1)
    Tn = T**n
    points = (
        Point("P1", _u, T ** (-n)),
        Point("P2", T, p * Tn),
        Point("P3", _v**2 * T, q * Tn),
    )
    curves = (
        CurveEquation("D*y^2 = f(x)", D, 2, _f_terms(params.f)),
        CurveEquation("y^2 = x^m + b*D", _ONE, 2, _x_poly([(m, _ONE), (0, b * D)])),
        CurveEquation("y^2 = x^m + c*D", _ONE, 2, _x_poly([(m, _ONE), (0, c * D)])),
    )
    factors = _xy_factors((_u, T, _v**2 * T), (T ** (-n), p * Tn, q * Tn)) + (
        ("f(x1)", fu),
        ("y2^2 - x2^m", (p * Tn) ** 2 - T**m),
        ("y3^2 - x3^m", (q * Tn) ** 2 - (_v**2 * T) ** m),
    )
    return TwistConstruction(Kind.Q2_2M_2M, _param_dict(params), D, T, p, q, points, curves, factors)


def build_m_m_2m(params: HyperParams) -> TwistConstruction:
    """m-twists of y^2 = x^m + a, x^m + b and a 2m-twist of y^2 = x^m + c.

    ``params.f`` is ignored: the first curve is forced to be y^2 = x^m + a.
    """
    params.validate(need_f=False)
    m, n, a, b, c = params.m, params.n, params.a, params.b, params.c
    u2m = _u ** (2 * m)
    p = (_w**2 + a - b * u2m) / (2 * _w)
    q = (-(_w**2) + a - b * u2m) / (2 * _u**m * _w)
    T = 4 * _w**2 / (c * _w**4 - 2 * (a * c - 2 * _v**m + b * c * u2m) * _w**2 + c * (a - b * u2m) ** 2)
    E = p**2 - a
    D = (_w**4 - 2 * (a + b * u2m) * _w**2 + (a - b * u2m) ** 2) / (4 * _w**2) * T**m
    Dm1 = D ** (m - 1)
    Tnm = T ** (n * m)
    points = (
        Point("P1", E * T ** (m - 1), p * E**n * Tnm),
        Point("P2", E * T ** (m - 1) / _u**2, E**n * q * Tnm),
        Point("P3", _v * T, T**n),
    )
    curves = (
        CurveEquation("y^2 = x^m + a*D^(m-1)", _ONE, 2, _x_poly([(m, _ONE), (0, a * Dm1)])),
        CurveEquation("y^2 = x^m + b*D^(m-1)", _ONE, 2, _x_poly([(m, _ONE), (0, b * Dm1)])),
        CurveEquation("y^2 = x^m + c*D", _ONE, 2, _x_poly([(m, _ONE), (0, c * D)])),
    )
    # system: x1=1/T, x2=1/(u^2 T), x3=vT, y1=p, y2=q, y3=T^n
    sys_x = (1 / T, 1 / (_u**2 * T), _v * T)
    sys_y = (p, q, T**n)
    factors = _xy_factors(sys_x, sys_y) + (
        ("y1^2 - a", p**2 - a),
        ("y2^2 - b", q**2 - b),
        ("y3^2 - x3^m", T ** (2 * n) - (_v * T) ** m),
    )
    return TwistConstruction(Kind.M_M_2M, _param_dict(params), D, T, p, q, points, curves, factors)


def build_p_twist_product(p: int, m: int, a: int, b: int) -> TwistConstruction:
    """Common p-twist D of y^p = x^m(x + a) and y^p = x^m(x + b), with points."""
    if p < 2:
        raise InvalidParameterError(f"p must be >= 2, got {p}")
    if not 0 < m < p:
        raise InvalidParameterError(f"need 0 < m < p, got m={m}, p={p}")
    if a == 0 or b == 0:
        raise InvalidParameterError("a and b must be nonzero")
    u, v, w, t = _u, _v, _w, _t
    T = (b * v**p * w**m - a * u**m * t**p) / (u ** (m + 1) * t**p - v**p * w ** (m + 1))
    D = T ** (m - p) * u**m * (u * T + a) / v**p
    x1, y1, x2, y2 = u * T, v * T, w * T, t * T
    points = (Point("P1", x1, y1), Point("P2", x2, y2))
    curves = (
        CurveEquation("D*y^p = x^m*(x + a)", D, p, _x_poly([(m + 1, _ONE), (m, RatFunc.constant(a))])),
        CurveEquation("D*y^p = x^m*(x + b)", D, p, _x_poly([(m + 1, _ONE), (m, RatFunc.constant(b))])),
    )
    factors = _xy_factors((x1, x2), (y1, y2)) + (
        ("x1 + a", x1 + a),
        ("x2 + b", x2 + b),
        ("x2 - x1", x2 - x1),
    )
    params = {"p": p, "m": m, "a": a, "b": b}
    return TwistConstruction(Kind.P_TWIST_PRODUCT, params, D, T, None, None, points, curves, factors)


def additive_exponents(p: int, s: int) -> tuple[int, int]:
    """Smallest alpha >= 1 (and beta >= 1) with p*alpha - s*beta = 1."""
    if gcd(p, s) != 1:
        raise InvalidParameterError(f"gcd(p, m+n) = gcd({p}, {s}) must be 1")
    alpha = pow(p, -1, s) if s > 1 else 1
    beta = (p * alpha - 1) // s
    if beta < 1:
        alpha += s
        beta = (p * alpha - 1) // s
    return alpha, beta


def build_p_twist_additive(p: int, m: int, n: int, a: int, b: int) -> TwistConstruction:
    """Common D with points on y^p = x^m(x^n + aD) and y^p = x^m(x^n + bD).

    With p*alpha - (m+n)*beta = 1 the points are (u T^beta, w T^alpha) and
    (v T^beta, t T^alpha); then y^p - x^(m+n) = T^((m+n) beta) (w^p T - u^(m+n))
    and the defining relation for T is linear.
    """
    if p < 2 or m < 1 or n < 1:
        raise InvalidParameterError("p >= 2 and m, n >= 1 required")
    if a == 0 or b == 0:
        raise InvalidParameterError("a and b must be nonzero")
    alpha, beta = additive_exponents(p, m + n)
    u, v, w, t = _u, _v, _w, _t
    T = u**m * v**m * (b * u**n - a * v**n) / (b * v**m * w**p - a * u**m * t**p)
    D = T ** (beta * n) * (w**p * T - u ** (m + n)) / (a * u**m)
    x1, y1 = u * T**beta, w * T**alpha
    x2, y2 = v * T**beta, t * T**alpha
    points = (Point("P1", x1, y1), Point("P2", x2, y2))
    curves = (
        CurveEquation("y^p = x^m*(x^n + a*D)", _ONE, p, _x_poly([(m + n, _ONE), (m, a * D)])),
        CurveEquation("y^p = x^m*(x^n + b*D)", _ONE, p, _x_poly([(m + n, _ONE), (m, b * D)])),
    )
    factors = _xy_factors((x1, x2), (y1, y2)) + (
        ("y1^p - x1^(m+n)", y1**p - x1 ** (m + n)),
        ("y2^p - x2^(m+n)", y2**p - x2 ** (m + n)),
    )
    params = {"p": p, "m": m, "n": n, "a": a, "b": b, "alpha": alpha, "beta": beta}
    return TwistConstruction(Kind.P_TWIST_ADDITIVE, params, D, T, None, None, points, curves, factors)


def build_example_2_m_2m(f: MultiPoly, m: int) -> TwistConstruction:
    """Quadratic, m- and 2m-twists (b = c = 1) by one function D(u, v).

    With p = (v^2 - f(u))/(2v) and q = (v^2 + f(u))/(2v), so q^2 - p^2 = f(u),
    D = f(u) p^(2(m-1)) and the points are
    (u, p^(1-m)), (f p^(2(m-2)), f^n p^(2n(m-1)-1) q), (p^2, p^(m-1) q).
    """
    if m < 3 or m % 2 == 0:
        raise InvalidParameterError(f"m must be odd and >= 3, got {m}")
    check_squarefree(f, min_degree=1)
    n = (m - 1) // 2
    fu = _f_at(f, "u")
    p = (_v**2 - fu) / (2 * _v)
    q = (_v**2 + fu) / (2 * _v)
    D = fu * p ** (2 * (m - 1))
    points = (
        Point("P", _u, p ** (1 - m)),
        Point("Q", fu * p ** (2 * (m - 2)), fu**n * p ** (2 * n * (m - 1) - 1) * q),
        Point("R", p**2, p ** (m - 1) * q),
    )
    curves = (
        CurveEquation("D*y^2 = f(x)", D, 2, _f_terms(f)),
        CurveEquation("y^2 = x^m + D^(m-1)", _ONE, 2, _x_poly([(m, _ONE), (0, D ** (m - 1))])),
        CurveEquation("y^2 = x^m + D", _ONE, 2, _x_poly([(m, _ONE), (0, D)])),
    )
    factors = _xy_factors(tuple(pt.x for pt in points), tuple(pt.y for pt in points)) + (
        ("f(u)", fu),
        ("p", p),
        ("q", q),
    )
    params = {"f": str(f), "m": m, "b": 1, "c": 1}
    return TwistConstruction(Kind.EXAMPLE_2_M_2M, params, D, p ** 2, p, q, points, curves, factors)


def _xy_factors(xs: Sequence[RatFunc], ys: Sequence[RatFunc]) -> tuple[tuple[str, RatFunc], ...]:
    out = []
    for i, (x, y) in enumerate(zip(xs, ys), start=1):
        out.append((f"x{i}", x))
        out.append((f"y{i}", y))
    return tuple(out)


def _param_dict(params: HyperParams) -> dict:
    return {
        "f": None if params.f is None else str(params.f),
        "m": params.m,
        "a": params.a,
        "b": params.b,
        "c": params.c,
    }


BUILDERS = {
    Kind.Q2_M_M: build_q2_m_m,
    Kind.Q2_2M_2M: build_q2_2m_2m,
    Kind.M_M_2M: build_m_m_2m,
}


# verification ------------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipCheck:
    point: str
    curve: str
    verified: bool
    residual: str | None


@dataclass(frozen=True)
class VerificationReport:
    kind: Kind
    checks: tuple[MembershipCheck, ...]

    @property
    def all_verified(self) -> bool:
        return all(c.verified for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "all_verified": self.all_verified,
            "checks": [
                {"point": c.point, "curve": c.curve, "verified": c.verified, "residual": c.residual}
                for c in self.checks
            ],
        }


def verify_on_curve(c: TwistConstruction) -> VerificationReport:
    checks = []
    for pt, curve in zip(c.points, c.curves):
        res = curve.residual(pt.x, pt.y)
        ok = res.is_zero()
        checks.append(MembershipCheck(pt.label, curve.label, ok, None if ok else str(res)))
    return VerificationReport(c.kind, tuple(checks))


@dataclass(frozen=True)
class FactorStatus:
    name: str
    nonzero: bool
    constant: bool


@dataclass(frozen=True)
class NondegeneracyReport:
    kind: Kind
    factors: tuple[FactorStatus, ...]
    nonconstant: tuple[tuple[str, bool], ...]

    @property
    def all_nonzero(self) -> bool:
        return all(f.nonzero for f in self.factors)

    @property
    def all_nonconstant(self) -> bool:
        return all(ok for _, ok in self.nonconstant)

    @property
    def ok(self) -> bool:
        return self.all_nonzero and self.all_nonconstant

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "ok": self.ok,
            "factors": [{"name": f.name, "nonzero": f.nonzero, "constant": f.constant} for f in self.factors],
            "nonconstant": dict(self.nonconstant),
        }


def verify_nondegenerate(c: TwistConstruction) -> NondegeneracyReport:
    """Every required factor is not identically zero; D and all coordinates vary."""
    factors = tuple(FactorStatus(name, not r.is_zero(), r.is_constant()) for name, r in c.factors)
    nonconst = [("D", not c.D.is_constant())]
    for pt in c.points:
        nonconst.append((f"{pt.label}.x", not pt.x.is_constant()))
        nonconst.append((f"{pt.label}.y", not pt.y.is_constant()))
    return NondegeneracyReport(c.kind, factors, tuple(nonconst))


# automorphisms ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool


@dataclass(frozen=True)
class AutomorphismReport:
    kind: Kind
    automorphism: str
    field: int
    checks: tuple[IdentityCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "automorphism": self.automorphism,
            "field": f"Q(zeta{self.field})",
            "all_hold": self.all_hold,
            "checks": {c.name: c.holds for c in self.checks},
        }


def verify_automorphism(kind: Kind | str, params: HyperParams) -> AutomorphismReport:
    """Check the coordinate identities behind the rank-two corollaries.

    phi (Q2_M_M, b = c):   v -> zeta_2m v, w -> -w
    psi (Q2_2M_2M, b = c): v -> zeta_2m v
    chi (M_M_2M, a = b):   u -> zeta_2m u
    """
    kind = Kind(kind)
    m = params.m
    z2m = CycInt.zeta(2 * m)
    zm = CycInt.zeta(2 * m, 2)
    if kind is Kind.Q2_M_M:
        if params.b != params.c:
            raise InvalidParameterError("phi needs b = c")
        name, sigma = "phi", {"v": z2m * _v, "w": -_w}
    elif kind is Kind.Q2_2M_2M:
        if params.b != params.c:
            raise InvalidParameterError("psi needs b = c")
        name, sigma = "psi", {"v": z2m * _v}
    elif kind is Kind.M_M_2M:
        if params.a != params.b:
            raise InvalidParameterError("chi needs a = b")
        name, sigma = "chi", {"u": z2m * _u}
    else:
        raise InvalidParameterError(f"no automorphism check for {kind.value}")
    c = BUILDERS[kind](params)

    def img(r: RatFunc) -> RatFunc:
        return substitute(r, sigma)

    P = {pt.label: pt for pt in c.points}
    checks = [IdentityCheck(f"{name}(T) = T", img(c.T) == c.T), IdentityCheck(f"{name}(D) = D", img(c.D) == c.D)]
    if kind is Kind.Q2_M_M:
        checks += [
            IdentityCheck("phi(p) = -p", img(c.p) == -c.p),
            IdentityCheck("phi(q) = q", img(c.q) == c.q),
            _point_check("phi(P1) = P1", img, P["P1"], 1, 1),
            _point_check("phi(P2) = (zeta_m^-1 x2, -y2)", img, P["P2"], zm.inverse(), -1),
            _point_check("phi(P3) = P3", img, P["P3"], 1, 1),
        ]
    elif kind is Kind.Q2_2M_2M:
        checks += [
            IdentityCheck("psi(p) = p", img(c.p) == c.p),
            IdentityCheck("psi(q) = -q", img(c.q) == -c.q),
            _point_check("psi(P2) = P2", img, P["P2"], 1, 1),
            _point_check("psi(P3) = (zeta_m x3, -y3)", img, P["P3"], zm, -1),
        ]
    else:
        checks += [
            IdentityCheck("chi(p) = p", img(c.p) == c.p),
            IdentityCheck("chi(q) = -q", img(c.q) == -c.q),
            _point_check("chi(P1) = P1", img, P["P1"], 1, 1),
            _point_check("chi(P2) = (zeta_m^-1 x2, -y2)", img, P["P2"], zm.inverse(), -1),
            _point_check("chi(P3) = P3", img, P["P3"], 1, 1),
        ]
    return AutomorphismReport(kind, name, 2 * m, tuple(checks))


def _point_check(name: str, img, pt: Point, sx, sy) -> IdentityCheck:
    ok = img(pt.x) == pt.x * sx and img(pt.y) == pt.y * sy
    return IdentityCheck(name, ok)


# specialization -------------------------------------------------------------------------------

@dataclass(frozen=True)
class NumericInstance:
    kind: Kind
    at: dict
    D: object
    points: tuple[tuple[str, object, object], ...]
    curves: tuple[NumericCurve, ...]
    membership: tuple[bool, ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "at": {k: str(v) for k, v in self.at.items()},
            "D": str(self.D),
            "points": [{"label": lbl, "x": str(x), "y": str(y)} for lbl, x, y in self.points],
            "curves": [
                {"label": cv.label, "lhs": str(cv.lhs), "y_exp": cv.y_exp,
                 "rhs": {str(i): str(co) for i, co in cv.rhs}}
                for cv in self.curves
            ],
            "membership": list(self.membership),
        }


def specialize_construction(c: TwistConstruction, point: Mapping[str, object]) -> NumericInstance:
    """Evaluate a construction at rational parameter values.

    Raises PoleError if some component has a pole there and DegeneracyError if
    a required factor vanishes.
    """
    at = {k: Fraction(v) for k, v in point.items()}
    # poles first: a pole of T must not masquerade as a vanishing factor
    if c.T is not None:
        c.T.evaluate(at)
    D = c.D.evaluate(at)
    pts = tuple((pt.label, pt.x.evaluate(at), pt.y.evaluate(at)) for pt in c.points)
    for name, r in c.factors:
        if r.evaluate(at) == 0:
            raise DegeneracyError(f"factor {name} vanishes at {_fmt_point(at)}")
    if D == 0:
        raise DegeneracyError(f"D vanishes at {_fmt_point(at)}")
    curves = tuple(cv.specialize(at) for cv in c.curves)
    membership = tuple(cv.contains(x, y) for cv, (_, x, y) in zip(curves, pts))
    return NumericInstance(c.kind, at, D, pts, curves, membership)


def _fmt_point(at: Mapping[str, Fraction]) -> str:
    return "(" + ", ".join(f"{k}={v}" for k, v in at.items()) + ")"


def perturb_point(c: TwistConstruction, index: int, y_factor=2) -> TwistConstruction:
    """Copy of c with one point's y-coordinate scaled (used to exercise the verifier)."""
    pts = list(c.points)
    pts[index] = replace(pts[index], y=pts[index].y * y_factor)
    return replace(c, points=tuple(pts))


__all__ = [
    "BUILDERS",
    "CurveEquation",
    "HyperParams",
    "Kind",
    "Point",
    "TwistConstruction",
    "additive_exponents",
    "build_example_2_m_2m",
    "build_m_m_2m",
    "build_p_twist_additive",
    "build_p_twist_product",
    "build_q2_2m_2m",
    "build_q2_m_m",
    "check_squarefree",
    "perturb_point",
    "specialize_construction",
    "verify_automorphism",
    "verify_nondegenerate",
    "verify_on_curve",
]
