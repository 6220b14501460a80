"""Jacobi sums tau = -sum chi^m(alpha) chi^k(1 - alpha) in Z[zeta_p]."""
from __future__ import annotations

from ..algebra.cyclotomic import CycInt
from ..errors import InvalidParameterError
from .counting import _jacobi_histogram
from .fields import FiniteField


def jacobi_sum(p: int, m: int, k: int, F: FiniteField, j: int = 1) -> CycInt:
    """tau for the character chi^j, where chi(g^i) = zeta_p^i."""
    if (F.q - 1) % p:
        raise InvalidParameterError(f"Jacobi sums of order {p} need q = 1 mod {p} (q={F.q})")
    if not 1 <= j <= p - 1:
        raise InvalidParameterError(f"character index must be in 1..{p - 1}, got {j}")
    hist = _jacobi_histogram(p, m, k, F.l, F.d)
    counts = [0] * p
    for e, h in enumerate(hist):
        if h:
            counts[(j * e) % p] -= h
    return CycInt.from_exponent_counts(p, counts)


def jacobi_sums(p: int, m: int, k: int, F: FiniteField) -> list[CycInt]:
    """[tau_1, ..., tau_{p-1}]."""
    return [jacobi_sum(p, m, k, F, j) for j in range(1, p)]
