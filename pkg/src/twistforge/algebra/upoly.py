"""Dense univariate polynomials over Q as coefficient lists (low degree first).

Small helpers used by the cyclotomic layer: exact division, reduction,
extended Euclid and resultants.  Lists are trimmed so that the last entry is
nonzero; the zero polynomial is ``[]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Coeffs = list


def trim(a: Sequence) -> Coeffs:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence) -> int:
    return len(a) - 1


def add(a: Sequence, b: Sequence) -> Coeffs:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: Sequence, b: Sequence) -> Coeffs:
    return add(a, [-c for c in b])


def mul(a: Sequence, b: Sequence) -> Coeffs:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_poly(a: Sequence, b: Sequence) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder over Q; ``b`` must be nonzero."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(a)]
    lead = Fraction(b[-1])
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return trim(q), trim(r[:db])


def divexact_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials by a monic divisor."""
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return [int(c) for c in q]


def reduce_monic(a: list, m: Sequence[int]) -> list:
    """Remainder of ``a`` modulo the monic integer polynomial ``m`` (in place friendly)."""
    a = list(a)
    d = len(m) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            base = i - d
            for j in range(d):
                a[base + j] -= c * m[j]
            a[i] = 0
    del a[d:]
    return a


def gcdex(a: Sequence, b: Sequence) -> tuple[Coeffs, Coeffs, Coeffs]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = [Fraction(c) for c in trim(a)], [Fraction(c) for c in trim(b)]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        s0 = [c / lead for c in s0]
        t0 = [c / lead for c in t0]
    return r0, s0, t0


def resultant(a: Sequence, b: Sequence) -> Fraction:
    """Resultant res(a, b) via the Euclidean recurrence."""
    a, b = [Fraction(c) for c in trim(a)], [Fraction(c) for c in trim(b)]
    if not a or not b:
        return Fraction(0)
    res = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * b[0] ** da
        _, r = divmod_poly(a, b)
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        # res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
        if (da * db) % 2:
            res = -res
        res *= b[-1] ** (da - dr)
        a, b = b, r
