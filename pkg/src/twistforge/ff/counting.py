"""Point counts on y^p = x^m (a - x)^k (or x^m (x + a)) over finite fields.

All counts are of the smooth projective model: the affine points plus the
single point at infinity (x^m (a - x)^k has degree m + k prime to p).
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from ..algebra.cyclotomic import CycInt
from ..errors import InvalidParameterError
from .curve import Form, SuperCurve
from .fields import FiniteField

DOUBLE_LOOP_LIMIT = 2000


def _other_logs(curve: SuperCurve, F: FiniteField) -> np.ndarray:
    """log of the linear factor at x = g^i for every i (-1 where it vanishes)."""
    log, zech = F.tables()
    n = F.q - 1
    la = int(log[F.from_int(curve.a)])
    # a - x = a (1 - x/a) and x + a = a (1 - (-x/a))
    shift = la if curve.form is Form.MINUS else la - F.log_minus_one()
    z = np.roll(zech, shift).astype(np.int64)
    return np.where(z < 0, -1, z + la)


def count_points(curve: SuperCurve, F: FiniteField) -> int:
    """#C(F_q) via discrete logs: y^p = c has gcd(p, q-1) roots when c is a
    nonzero p-th power, one root when c = 0 and none otherwise."""
    curve.require_good_reduction(F.l)
    q, p = F.q, curve.p
    if gcd(p, q - 1) == 1:
        # y -> y^p is a bijection of F_q
        return q + 1
    other = _other_logs(curve, F)
    live = other >= 0
    idx = np.nonzero(live)[0]
    e = (curve.m * idx + curve.k * other[live]) % p
    residues = int(np.count_nonzero(e == 0))
    # x = 0 and the root of the linear factor give one point each
    return 1 + 2 + p * residues


def count_points_double_loop(curve: SuperCurve, F: FiniteField) -> int:
    """Ground-truth count by testing every (x, y) pair; only for q <= 2000."""
    curve.require_good_reduction(F.l)
    if F.q > DOUBLE_LOOP_LIMIT:
        raise InvalidParameterError(f"double-loop oracle is limited to q <= {DOUBLE_LOOP_LIMIT}")
    a = F.from_int(curve.a)
    ypow = np.array([F.pow(y, curve.p) for y in range(F.q)], dtype=np.int64)
    affine = 0
    for x in range(F.q):
        if curve.form is Form.PLUS:
            rhs = F.mul(F.pow(x, curve.m), F.add(x, a))
        else:
            rhs = F.mul(F.pow(x, curve.m), F.pow(F.sub(a, x), curve.k))
        affine += int(np.count_nonzero(ypow == rhs))
    return affine + 1


@lru_cache(maxsize=64)
def _jacobi_histogram(p: int, m: int, k: int, l: int, d: int) -> tuple[int, ...]:
    """H[e] = #{alpha != 0, 1 : m*log(alpha) + k*log(1 - alpha) = e mod p}."""
    from .fields import field

    F = field(l, d)
    zech = F.tables()[1].astype(np.int64)
    live = zech >= 0
    idx = np.nonzero(live)[0]
    e = (m * idx + k * zech[live]) % p
    return tuple(int(c) for c in np.bincount(e, minlength=p))


def character_exponent(a: int, F: FiniteField, p: int) -> int:
    """e with chi(a) = zeta_p^e, where chi(g^i) = zeta_p^i for the field generator g."""
    if (q1 := F.q - 1) % p:
        raise InvalidParameterError(f"q = {F.q} is not 1 mod {p}")
    a = F.from_int(a)
    if a == 0:
        raise InvalidParameterError("character of zero")
    if F.q <= 10**5 or F._tables is not None or F.d > 1:
        return F.log(a) % p
    # prime field without tables: chi(a) is determined by a^((q-1)/p)
    target = pow(a, q1 // p, F.l)
    base = pow(F.generator, q1 // p, F.l)
    acc = 1
    for e in range(p):
        if acc == target:
            return e
        acc = acc * base % F.l
    raise AssertionError("unreachable")  # pragma: no cover


def char_sum_count(curve: SuperCurve, F: FiniteField) -> int:
    """1 + q - sum_j chi^{j(m+k)}(a) tau_j, evaluated exactly in Z[zeta_p]."""
    curve.require_good_reduction(F.l)
    if (F.q - 1) % curve.p:
        raise InvalidParameterError(f"character-sum count needs q = 1 mod p (q={F.q}, p={curve.p})")
    c = curve.to_minus()
    p = c.p
    hist = _jacobi_histogram(p, c.m, c.k, F.l, F.d)
    ea = character_exponent(c.a, F, p)
    # sum_j zeta^{j(m+k)ea} tau_j with tau_j = -sum_e H[e] zeta^{je}
    counts = [0] * p
    for j in range(1, p):
        shift = j * (c.m + c.k) * ea
        for e, h in enumerate(hist):
            if h:
                counts[(j * e + shift) % p] -= h
    total = CycInt.from_exponent_counts(p, counts)
    if not total.is_rational():
        raise AssertionError(f"character sum {total} is not rational")
    return 1 + F.q - int(total.to_rational())


def is_pth_power(a: int, l: int, p: int) -> bool:
    """Whether a is a p-th power in F_l^*."""
    if a % l == 0:
        raise InvalidParameterError(f"{l} divides {a}")
    if (l - 1) % p:
        return True
    return pow(a, (l - 1) // p, l) == 1
