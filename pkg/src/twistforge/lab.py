"""Scanners for open questions: the parity conjecture for J^{a,1,k}(F_l), the
2-torsion search space, and bounded-height point searches on simultaneous twists.

Nothing here proves anything; reports are evidence tables.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from sympy import factorint, integer_nthroot, isprime, primerange

from ._parallel import pmap
from .algebra.poly import MultiPoly
from .errors import FieldTooLargeError, InvalidParameterError
from .ff.counting import is_pth_power
from .ff.curve import Form, SuperCurve
from .ff.zeta import zeta_report
from .torsion import pth_power_free


@dataclass
class ScanReport:
    kind: str
    grid: dict
    cases: list[dict]
    violations: list[dict] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)
    timing: dict = dc_field(default_factory=dict)

    def to_dict(self, with_timing: bool = True) -> dict:
        out = {
            "kind": self.kind,
            "grid": self.grid,
            "cases": self.cases,
            "violations": self.violations,
            "notes": self.notes,
        }
        if with_timing:
            out["timing"] = self.timing
        return out


# parity conjecture / 2-torsion search space -----------------------------------------------------

def _normalize_grid(p: int, a_set: Sequence[int], k_set: Sequence[int]) -> tuple[list[int], list[int], list[str]]:
    if not (isprime(p) and p > 5):
        raise InvalidParameterError(f"p must be a prime > 5, got {p}")
    notes = []
    a_norm: list[int] = []
    for a in a_set:
        a0, s = pth_power_free(a, p)
        if a0 != a:
            notes.append(f"a = {a} normalized to {a0} (= a / {s}^{p} up to sign)")
        if a0 % 2:
            raise InvalidParameterError(f"a = {a} is not even after normalization ({a0})")
        if a0 not in a_norm:
            a_norm.append(a0)
    allowed = [k for k in range(2, p - 2) if k != (p - 1) // 2]
    for k in k_set:
        if k not in allowed:
            raise InvalidParameterError(f"k = {k} is outside {allowed}")
    return a_norm, sorted(set(k_set)), notes


def _parity_case(args: tuple[int, int, int, int]) -> dict:
    p, a, k, l = args
    curve = SuperCurve(p, 1, k, a, Form.MINUS)
    order = zeta_report(curve, l, "jacobi").jacobian_order
    return {"a": a, "k": k, "l": l, "jacobian_order": order, "parity": "odd" if order % 2 else "even"}


def scan_parity_conjecture(
    p: int,
    a_set: Sequence[int],
    k_set: Sequence[int],
    l_bound: int,
    *,
    jobs: int | None = 1,
) -> ScanReport:
    """#J^{a,1,k}(F_l) for l = 1 mod p, l not dividing a, a not a p-th power mod l.

    The conjecture predicts every such order is odd; even orders are violations.
    """
    start = time.perf_counter()
    a_norm, ks, notes = _normalize_grid(p, a_set, k_set)
    work = []
    for a in a_norm:
        for k in ks:
            for l in primerange(2, l_bound + 1):
                if l % p == 1 and a % l and not is_pth_power(a, l, p):
                    work.append((p, a, k, l))
    cases = pmap(_parity_case, work, jobs)
    violations = [c for c in cases if c["parity"] == "even"]
    grid = {"p": p, "a": a_norm, "k": ks, "l_bound": l_bound}
    return ScanReport("parity", grid, cases, violations, notes, {"seconds": time.perf_counter() - start})


def _q5_order(args: tuple[int, int, int, int]) -> dict:
    p, a, k, l = args
    curve = SuperCurve(p, 1, k, a, Form.MINUS)
    try:
        r = zeta_report(curve, l)
    except FieldTooLargeError:
        return {"l": l, "skipped": "field too large"}
    return {"l": l, "jacobian_order": r.jacobian_order}


def scan_question5(
    p: int,
    a_set: Sequence[int],
    k_set: Sequence[int],
    l_bound: int,
    *,
    jobs: int | None = 1,
) -> ScanReport:
    """gcd of #J^{a,1,k}(F_l) over odd good l <= l_bound; an odd gcd rules out rational 2-torsion."""
    start = time.perf_counter()
    a_norm, ks, notes = _normalize_grid(p, a_set, k_set)
    cases = []
    for a in a_norm:
        for k in ks:
            ls = [l for l in primerange(3, l_bound + 1) if l != p and a % l]
            rows = pmap(_q5_order, [(p, a, k, l) for l in ls], jobs)
            g = 0
            for r in rows:
                if "jacobian_order" in r:
                    g = gcd(g, r["jacobian_order"])
            sampled = [r for r in rows if "jacobian_order" in r]
            if not sampled:
                status = "no data"
            elif g % 2:
                status = "no rational 2-torsion (certified)"
            else:
                status = "2-torsion not excluded"
            cases.append({
                "a": a,
                "k": k,
                "orders": rows,
                "gcd": g,
                "status": status,
                "flagged": status != "no rational 2-torsion (certified)",
            })
    flagged = [{"a": c["a"], "k": c["k"], "gcd": c["gcd"]} for c in cases if c["flagged"]]
    grid = {"p": p, "a": a_norm, "k": ks, "l_bound": l_bound}
    return ScanReport("question5", grid, cases, flagged, notes, {"seconds": time.perf_counter() - start})


# point searches on simultaneous twists ------------------------------------------------------------

class Family(str, Enum):
    QUAD_M_2M = "quad-m-2m"  # d y^2 = f(x), y^2 = d x^m + b, y^2 = x^m + c d
    M_M_M = "m-m-m"  # y^2 = d x^m + a_i, i = 1, 2, 3
    P_P_P = "p-p-p"  # d y^p = x^m (x + a_i), i = 1, 2, 3


@dataclass(frozen=True)
class TwistCurve:
    """lhs * y^e = rhs(x), with rhs given as {degree: coefficient}."""

    label: str
    lhs: Fraction
    e: int
    rhs: tuple[tuple[int, Fraction], ...]
    need_x_nonzero: bool = True

    def value(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for i, c in self.rhs:
            acc += c * x**i
        return acc / self.lhs


def rational_root(v: Fraction, e: int) -> Fraction | None:
    """The rational y with y^e = v (the nonnegative one when e is even), or None."""
    if v < 0 and e % 2 == 0:
        return None
    sign = -1 if v < 0 else 1
    n, d = abs(v.numerator), v.denominator
    rn, exact_n = integer_nthroot(n, e)
    if not exact_n:
        return None
    rd, exact_d = integer_nthroot(d, e)
    if not exact_d:
        return None
    return sign * Fraction(int(rn), int(rd))


def rationals_by_height(bound: int) -> Iterator[Fraction]:
    """Every rational of height max(|n|, d) <= bound, by height, then n, then d."""
    yield Fraction(0)
    for h in range(1, bound + 1):
        found = set()
        for n in range(-h, h + 1):
            for d in range(1, h + 1):
                if n and max(abs(n), d) == h and gcd(n, d) == 1:
                    found.add(Fraction(n, d))
        yield from sorted(found, key=lambda r: (r.numerator, r.denominator))


def find_points(curve: TwistCurve, xy_height: int, limit: int = 1) -> list[tuple[Fraction, Fraction]]:
    """Up to `limit` points (x, y) with y != 0 (and x != 0 if required), x of height <= xy_height."""
    out = []
    for x in rationals_by_height(xy_height):
        if x == 0 and curve.need_x_nonzero:
            continue
        y = rational_root(curve.value(x), curve.e)
        if y is None or y == 0:
            continue
        out.append((x, y))
        if len(out) >= limit:
            break
    return out


def twist_degree(family: Family, params: dict) -> int:
    if family is Family.QUAD_M_2M:
        return 2 * params["m"]
    if family is Family.M_M_M:
        return params["m"]
    return params["p"]


def canonical_twist_parameter(d: Fraction, n: int) -> Fraction:
    """Representative of d in Q* / Q*^n: an integer with every prime exponent in [0, n)."""
    d = Fraction(d)
    if d == 0:
        raise InvalidParameterError("twist parameter must be nonzero")
    rep = -1 if d < 0 else 1
    for r, e in factorint(abs(d.numerator)).items():
        rep *= r ** (e % n)
    for r, e in factorint(d.denominator).items():
        rep *= r ** (-e % n)
    return Fraction(rep)


def admissibility_witness(d: Fraction, n: int) -> int | None:
    """A prime whose exponent in d is coprime to n, or None if there is none."""
    d = Fraction(d)
    exps = dict(factorint(abs(d.numerator)))
    for r, e in factorint(d.denominator).items():
        exps[r] = -e
    for r in sorted(exps):
        if gcd(exps[r], n) == 1:
            return r
    return None


def _validate_family(family: Family, params: dict) -> dict:
    params = dict(params)
    if family is Family.QUAD_M_2M:
        m = params.get("m")
        if not isinstance(m, int) or m < 3 or m % 2 == 0:
            raise InvalidParameterError(f"m must be an odd integer >= 3, got {m}")
        f = params.get("f")
        if not isinstance(f, MultiPoly) or f.is_constant():
            raise InvalidParameterError("QUAD_M_2M needs a nonconstant polynomial f in x")
        if set(f.variables()) - {"x"}:
            raise InvalidParameterError("f must be a polynomial in x")
        params.setdefault("b", 1)
        params.setdefault("c", 1)
        if params["b"] == 0 or params["c"] == 0:
            raise InvalidParameterError("b and c must be nonzero")
    elif family is Family.M_M_M:
        m = params.get("m")
        if not isinstance(m, int) or m < 3 or m % 2 == 0:
            raise InvalidParameterError(f"m must be an odd integer >= 3, got {m}")
        coeffs = params.get("coefficients", (params.get("a"), params.get("b"), params.get("c")))
        if len(coeffs) != 3 or any(not isinstance(c, int) or c == 0 for c in coeffs):
            raise InvalidParameterError("M_M_M needs three nonzero integers a, b, c")
        params["coefficients"] = tuple(coeffs)
    else:
        p, m = params.get("p"), params.get("m")
        if not (isinstance(p, int) and p > 2 and isprime(p)):
            raise InvalidParameterError(f"p must be an odd prime, got {p}")
        if not (isinstance(m, int) and 0 < m < p - 1):
            raise InvalidParameterError(f"need 0 < m < p - 1, got m={m}")
        coeffs = params.get("coefficients")
        if coeffs is None or len(coeffs) != 3 or any(not isinstance(c, int) or c == 0 for c in coeffs):
            raise InvalidParameterError("P_P_P needs three nonzero integers a_1, a_2, a_3")
        params["coefficients"] = tuple(coeffs)
    return params


def family_curves(family: Family, params: dict, d: Fraction) -> tuple[TwistCurve, ...]:
    d = Fraction(d)
    one = Fraction(1)
    if family is Family.QUAD_M_2M:
        m, b, c = params["m"], Fraction(params["b"]), Fraction(params["c"])
        f_terms = tuple((exp[-1], Fraction(co)) for exp, co in params["f"].terms.items())
        return (
            TwistCurve("d*y^2 = f(x)", d, 2, f_terms, need_x_nonzero=False),
            TwistCurve(f"y^2 = d*x^{m} + {b}", one, 2, ((m, d), (0, b))),
            TwistCurve(f"y^2 = x^{m} + {c}*d", one, 2, ((m, one), (0, c * d))),
        )
    if family is Family.M_M_M:
        m = params["m"]
        return tuple(
            TwistCurve(f"y^2 = d*x^{m} + {a}", one, 2, ((m, d), (0, Fraction(a))))
            for a in params["coefficients"]
        )
    p, m = params["p"], params["m"]
    return tuple(
        TwistCurve(f"d*y^{p} = x^{m}*(x + {a})", d, p, ((m + 1, one), (m, Fraction(a))))
        for a in params["coefficients"]
    )


def _search_one(args) -> dict:
    family, params, d, xy_height = args
    found = {}
    for curve in family_curves(family, params, d):
        pts = find_points(curve, xy_height)
        found[curve.label] = [[str(x), str(y)] for x, y in pts[:1]]
    return {"d": str(d), "points": found, "simultaneous": all(found.values())}


def point_search_twists(
    family: Family | str,
    params: dict,
    d_height: int,
    xy_height: int,
    *,
    jobs: int | None = 1,
) -> ScanReport:
    """Twist parameters d with a nontrivial point on every curve of the family.

    d runs over canonical representatives of Q*/Q*^n with |d| <= d_height, where
    n is the twist degree (2m, m or p): twisting by d and d*s^n gives isomorphic
    curves.  Non-admissible d (no prime exponent coprime to n) are logged and
    skipped.  Points are searched with x of height <= xy_height.
    """
    start = time.perf_counter()
    family = Family(family)
    params = _validate_family(family, params)
    n = twist_degree(family, params)
    shown = {k: (str(v) if isinstance(v, MultiPoly) else v) for k, v in params.items()}
    grid = {"family": family.value, "params": shown, "d_height": d_height, "xy_height": xy_height, "twist_degree": n}
    report = ScanReport("point-search", grid, [])
    if d_height < 1 or xy_height < 1:
        report.timing["seconds"] = time.perf_counter() - start
        return report
    candidates, excluded = [], []
    for mag in range(1, d_height + 1):
        for d in (Fraction(mag), Fraction(-mag)):
            if canonical_twist_parameter(d, n) != d:
                continue
            if admissibility_witness(d, n) is None:
                excluded.append({"d": str(d), "reason": f"no prime exponent coprime to {n}"})
                continue
            candidates.append(d)
    report.cases = pmap(_search_one, [(family, params, d, xy_height) for d in candidates], jobs)
    report.violations = []
    report.notes = [f"excluded d = {e['d']}: {e['reason']}" for e in excluded]
    report.grid["excluded"] = excluded
    report.timing["seconds"] = time.perf_counter() - start
    return report


def simultaneous_hits(report: ScanReport) -> list[str]:
    return [c["d"] for c in report.cases if c["simultaneous"]]

