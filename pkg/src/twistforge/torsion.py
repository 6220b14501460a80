"""Torsion evidence for the Jacobians of y^p = x^m (x + a) and y^p = x^m (a - x)^k.

Upper bounds come from reduction: for a prime l of good reduction above some
unknown threshold, #J(Q)_tors divides #J(F_l).  For l a primitive root mod p,
#J(F_l) = l^((p-1)/2) + 1, and choosing l = 1 mod 4 or l = 1 mod q kills the
4- and q-parts.  The lower bound Z/pZ is witnessed by ((0,0)) - (oo), whose
p-th multiple is div(x).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import partial
from math import gcd
from typing import Callable

from sympy import factorint, isprime, n_order, nextprime, primerange

from ._parallel import pmap
from .algebra.funcfield import CurveFunctionField, FFElement
from .algebra.ratfunc import RatFunc
from .errors import AnomalyError, InvalidParameterError
from .ff.curve import Form, SuperCurve
from .ff.zeta import jacobian_order, zeta_report

WITNESS = "D = ((0,0)) - (oo) is not principal and p*D = div(x), so J(Q) contains Z/pZ"


# helpers ------------------------------------------------------------------------------------

def pth_power_free(a: int, p: int) -> tuple[int, int]:
    """(a0, s) with |a| = a0 * s^p and a0 p-th-power-free, a0 > 0.

    The sign is dropped: x -> -x, y -> -y identifies C^{a,m,k} with C^{-a,m,k}.
    """
    if a == 0:
        raise InvalidParameterError("a must be nonzero")
    a0, s = 1, 1
    for r, e in factorint(abs(a)).items():
        a0 *= r ** (e % p)
        s *= r ** (e // p)
    return a0, s


def is_primitive_root(l: int, p: int) -> bool:
    return l % p != 0 and int(n_order(l, p)) == p - 1


def auxiliary_prime(p: int) -> int:
    """Smallest prime q with q not dividing 2p."""
    q = 3
    while q == p:
        q = nextprime(q)
    return q


# torsion certificate --------------------------------------------------------------------------

@dataclass(frozen=True)
class SampledPrime:
    l: int
    flavors: tuple[str, ...]
    jacobian_order: int
    method: str

    def to_dict(self) -> dict:
        return {"l": self.l, "flavors": list(self.flavors), "jacobian_order": self.jacobian_order, "method": self.method}


@dataclass(frozen=True)
class TorsionCertificate:
    curve: SuperCurve
    sampled: tuple[SampledPrime, ...]
    order_gcd: int
    auxiliary_q: int
    contains_Zp: bool
    witness: str
    gcd_divides_2p: bool
    anomalies: tuple[str, ...] = dc_field(default=())

    @property
    def sampled_primes(self) -> tuple[int, ...]:
        return tuple(s.l for s in self.sampled)

    @property
    def upper_claim(self) -> str:
        p = self.curve.p
        verdict = "divides" if self.gcd_divides_2p else "does not divide"
        return f"gcd of sampled #J(F_l) = {self.order_gcd} {verdict} 2p = {2 * p}"

    def ok(self) -> bool:
        return self.contains_Zp and self.gcd_divides_2p and not self.anomalies

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "sampled": [s.to_dict() for s in self.sampled],
            "order_gcd": self.order_gcd,
            "auxiliary_q": self.auxiliary_q,
            "lower_bound": {"contains_Z/pZ": self.contains_Zp, "witness": self.witness},
            "upper_claim": self.upper_claim,
            "gcd_divides_2p": self.gcd_divides_2p,
            "anomalies": list(self.anomalies),
            "ok": self.ok(),
        }


def _order_at(curve: SuperCurve, l: int) -> tuple[int, str]:
    r = zeta_report(curve, l)
    return r.jacobian_order, r.method


def torsion_bound(
    curve: SuperCurve,
    prime_budget: int = 10,
    prime_ceiling: int = 500,
    *,
    jobs: int | None = 1,
    seed: int | None = None,
) -> TorsionCertificate:
    """Sample odd good primitive-root primes in three flavors and take the gcd of #J(F_l).

    Flavors: plain primitive roots; those with l = 1 mod 4; those with
    l = 1 mod q for the auxiliary prime q.  Primes are drawn round-robin,
    smallest first (or shuffled by `seed`).
    """
    if prime_budget < 3:
        raise InvalidParameterError(f"prime_budget must be at least 3, got {prime_budget}")
    p = curve.p
    q = auxiliary_prime(p)
    pool = [l for l in primerange(3, prime_ceiling + 1) if curve.has_good_reduction(l) and is_primitive_root(l, p)]
    lists = {
        "l=1 mod 4": [l for l in pool if l % 4 == 1],
        f"l=1 mod {q}": [l for l in pool if l % q == 1],
        "primitive root": list(pool),
    }
    for name, ls in lists.items():
        if not ls:
            raise InvalidParameterError(f"no primes of flavor '{name}' below {prime_ceiling}")
    if len(pool) < prime_budget:
        raise InvalidParameterError(
            f"only {len(pool)} qualifying primes below {prime_ceiling}, budget is {prime_budget}"
        )
    if seed is not None:
        rng = random.Random(seed)
        for ls in lists.values():
            rng.shuffle(ls)
    chosen: list[int] = []
    iters = [iter(ls) for ls in lists.values()]
    while len(chosen) < prime_budget:
        for it in iters:
            for l in it:
                if l not in chosen:
                    chosen.append(l)
                    break
            if len(chosen) == prime_budget:
                break
    results = pmap(partial(_order_at, curve), chosen, jobs)
    sampled = []
    for l, (order, method) in zip(chosen, results):
        tags = tuple(name for name, ls in lists.items() if l in ls)
        sampled.append(SampledPrime(l, tags, order, method))
    g = 0
    for s in sampled:
        g = gcd(g, s.jacobian_order)
    anomalies = []
    for s in sampled:
        expected = s.l ** ((p - 1) // 2) + 1
        if s.jacobian_order != expected:
            anomalies.append(f"#J(F_{s.l}) = {s.jacobian_order}, expected l^((p-1)/2)+1 = {expected}")
    if g % p:
        anomalies.append(f"gcd {g} is not divisible by p = {p}")
    divides = (2 * p) % g == 0
    if not divides:
        anomalies.append(f"gcd {g} does not divide 2p = {2 * p}")
    return TorsionCertificate(
        curve=curve,
        sampled=tuple(sampled),
        order_gcd=g,
        auxiliary_q=q,
        contains_Zp=True,
        witness=WITNESS,
        gcd_divides_2p=divides,
        anomalies=tuple(anomalies),
    )


# 2-torsion --------------------------------------------------------------------------------------

def gr_two_torsion_condition(p: int, m: int, k: int) -> bool:
    """p = 7 and m^3 = k^3 = -(m+k)^3 mod 7 (the Gross-Rohrlich criterion for y^p = x^m (1-x)^k)."""
    if not (m > 0 and k > 0 and m + k < p):
        raise InvalidParameterError(f"need 0 < m, k and m + k < p, got m={m}, k={k}, p={p}")
    if p != 7:
        return False
    return pow(m, 3, 7) == pow(k, 3, 7) == (-pow(m + k, 3, 7)) % 7


def hyperelliptic_k_values(p: int) -> tuple[int, ...]:
    return tuple(sorted({1, (p - 1) // 2, p - 2}))


def two_torsion_special(p: int, k: int, a: int) -> bool:
    """Whether J^{a,1,k}(Q) has a point of order 2, for k in {1, (p-1)/2, p-2}.

    a is first made p-th-power-free.  k = 1: iff a = 2; otherwise iff a = 2^(p-2).
    """
    if not (p > 2 and isprime(p)):
        raise InvalidParameterError(f"p must be an odd prime, got {p}")
    if k not in hyperelliptic_k_values(p):
        raise InvalidParameterError(f"k must be one of {hyperelliptic_k_values(p)}, got {k}")
    a0, _ = pth_power_free(a, p)
    if k == 1:
        return a0 == 2
    return a0 == 2 ** (p - 2)


@dataclass(frozen=True)
class TwoTorsionVerdict:
    curve: SuperCurve
    has_two_torsion: bool
    slopes: tuple[Fraction, ...]
    P_coeffs: tuple[int, ...]
    reason: str

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "has_two_torsion": self.has_two_torsion,
            "slopes_at_2": [str(s) for s in self.slopes],
            "P_2": list(self.P_coeffs),
            "reason": self.reason,
        }


def no_two_torsion_odd_a(p: int, a: int, m: int = 1, k: int = 1) -> TwoTorsionVerdict:
    """No rational 2-torsion on J^{a,m,k} for odd a and p != 7, with P_2 slopes as evidence.

    Rational 2-torsion would force J to be ordinary at 2; the slopes of P_2 show
    it is not.  All-integral slopes raise AnomalyError instead of a verdict.
    """
    if a % 2 == 0:
        raise InvalidParameterError(f"a must be odd, got {a}")
    if p == 7:
        raise InvalidParameterError("p = 7 is excluded (J can be ordinary at 2 there)")
    curve = SuperCurve(p, m, k, a, Form.MINUS)
    report = zeta_report(curve, 2)
    if report.is_ordinary():
        raise AnomalyError(f"{curve} is ordinary at 2 (slopes {list(map(str, report.slopes))})")
    return TwoTorsionVerdict(
        curve=curve,
        has_two_torsion=False,
        slopes=report.slopes,
        P_coeffs=report.P_coeffs,
        reason="J is not ordinary over F_2: P_2 has a slope strictly between 0 and 1",
    )


def two_sample_orders(curve: SuperCurve, l_bound: int) -> dict[int, int]:
    """#J(F_l) for every odd good prime l <= l_bound (used for parity corroboration)."""
    return {l: jacobian_order(curve, l) for l in primerange(3, l_bound + 1) if curve.has_good_reduction(l)}


# hyperelliptic equivalences ---------------------------------------------------------------------

Map = Callable[[FFElement, FFElement], tuple[FFElement, FFElement]]


def _h(a, k: int) -> RatFunc:
    x = RatFunc.var("x")
    return x * (RatFunc.constant(a) - x) ** k


def l7_forward_map(p: int, a) -> Map:
    """F(x, y) = (a - y^p/(a-x)^((p-1)/2), y^(p-2)/(a-x)^((p-3)/2))."""

    def F(x: FFElement, y: FFElement):
        t = a - x
        return a - y**p / t ** ((p - 1) // 2), y ** (p - 2) / t ** ((p - 3) // 2)

    return F


def l7_inverse_map(p: int, a) -> Map:
    """G(x, y) = (a - y^p/(a-x)^(p-2), y^((p-1)/2)/(a-x)^((p-3)/2))."""

    def G(x: FFElement, y: FFElement):
        t = a - x
        return a - y**p / t ** (p - 2), y ** ((p - 1) // 2) / t ** ((p - 3) // 2)

    return G


def hyperelliptic_models(p: int, a) -> tuple[Fraction, Fraction]:
    """Constants c1, c2 of y^2 = x^p + c1 (from k = 1) and y^2 = x^p + c2 (from k = p-2)."""
    a = Fraction(a)
    return 4 ** (p - 1) * a**2, (4 * a) ** (p - 1)


@dataclass(frozen=True)
class L7Check:
    name: str
    passed: bool
    residual: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "residual": self.residual}


@dataclass(frozen=True)
class L7Report:
    p: int
    a: Fraction
    checks: tuple[L7Check, ...]
    models: tuple[str, str]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> L7Check:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "a": str(self.a),
            "checks": [c.to_dict() for c in self.checks],
            "models": list(self.models),
            "all_passed": self.all_passed,
        }


def _check(name: str, residuals: list[FFElement]) -> L7Check:
    bad = [r for r in residuals if not r.is_zero()]
    return L7Check(name, not bad, "0" if not bad else "; ".join(str(r) for r in bad))


def verify_l7_equivalences(p: int, a, *, forward: Map | None = None) -> L7Report:
    """Check the birational maps and hyperelliptic models of y^p = x (a-x)^k, k in {1, (p-1)/2, p-2}.

    Every check is an identity in a function field Q(x)[y]/(y^n - h(x)).
    `forward` overrides F (used to confirm that a broken map is caught).
    """
    if not (p > 2 and isprime(p)):
        raise InvalidParameterError(f"p must be an odd prime, got {p}")
    a = Fraction(a)
    if a == 0:
        raise InvalidParameterError("a must be nonzero")
    F = forward or l7_forward_map(p, a)
    G = l7_inverse_map(p, a)
    half = (p - 1) // 2

    # (i) F sends the generic point of C^{a,1,(p-1)/2} to C^{a,1,p-2}
    K1 = CurveFunctionField(p, _h(a, half), f"y^{p} = x*(a - x)^{half}")
    x, y = K1.x(), K1.y()
    X, Y = F(x, y)
    on_target = Y**p - X * (a - X) ** (p - 2)
    checks = [_check("F maps C^{a,1,(p-1)/2} into C^{a,1,p-2}", [on_target])]

    # (ii) G o F is the identity
    X2, Y2 = G(X, Y)
    checks.append(_check("G o F = id", [X2 - x, Y2 - y]))

    # (iii) the two hyperelliptic models
    c1, c2 = hyperelliptic_models(p, a)
    xr = RatFunc.var("x")
    E1 = CurveFunctionField(2, xr**p + RatFunc.constant(c1), f"y^2 = x^{p} + {c1}")
    u, v = E1.x(), E1.y()
    sx, sy = v / 2**p + a / 2, -u / 4
    checks.append(_check("y^p = x(a-x) -> y^2 = x^p + 4^(p-1) a^2", [sy**p - sx * (a - sx)]))

    E2 = CurveFunctionField(2, xr**p + RatFunc.constant(c2), f"y^2 = x^{p} + {c2}")
    u, v = E2.x(), E2.y()
    s = v / (2**p * a**half) - Fraction(1, 2)
    r = (4 * a) / u
    sx, sy = a - r**p * s, r ** (p - 1) * s
    checks.append(_check("y^p = x(a-x)^(p-2) -> y^2 = x^p + (4a)^(p-1)", [sy**p - sx * (a - sx) ** (p - 2)]))

    models = (f"y^2 = x^{p} + {c1}", f"y^2 = x^{p} + {c2}")
    return L7Report(p, a, tuple(checks), models)
