"""Finite fields F_{l^d} with elements encoded as integers.

An element c_0 + c_1 X + ... + c_{d-1} X^{d-1} (mod the defining polynomial) is
encoded as the integer c_0 + c_1 l + ... + c_{d-1} l^{d-1}, so F_l sits inside
as 0..l-1.  Discrete-log tables for a fixed primitive element are built with
numpy and cached per field.
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt

import flint
import numpy as np
from sympy import factorint, isprime

from ..errors import FieldTooLargeError, InvalidParameterError

#: Largest field for which log tables (and hence enumeration) are built.
ENUMERATION_LIMIT = 20_000_000


def _digits(e: int, l: int, d: int) -> list[int]:
    out = []
    for _ in range(d):
        e, r = divmod(e, l)
        out.append(r)
    return out


def _encode(coeffs, l: int) -> int:
    acc = 0
    for c in reversed(list(coeffs)):
        acc = acc * l + int(c)
    return acc


@lru_cache(maxsize=None)
def smallest_irreducible(l: int, d: int) -> tuple[int, ...]:
    """Monic irreducible of degree d over F_l whose lower coefficients have the
    smallest integer encoding; coefficients low degree first."""
    if d == 1:
        return (0, 1)
    for code in range(l ** d):
        low = _digits(code, l, d)
        if low[0] == 0:
            continue
        _, factors = flint.nmod_poly(low + [1], l).factor()
        if len(factors) == 1 and factors[0][1] == 1:
            return tuple(low + [1])
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """F_q with q = l^d; elements are ints in range(q)."""

    def __init__(self, l: int, d: int = 1):
        if not isprime(l):
            raise InvalidParameterError(f"field characteristic {l} is not prime")
        if d < 1:
            raise InvalidParameterError("extension degree must be >= 1")
        self.l = l
        self.d = d
        self.q = l ** d
        self.modulus = smallest_irreducible(l, d)
        self._gen: int | None = None
        self._tables: tuple[np.ndarray, np.ndarray] | None = None

    def __repr__(self) -> str:
        return f"FiniteField({self.l}, {self.d})"

    # scalar arithmetic on encodings ------------------------------------------------
    def coeffs(self, e: int) -> list[int]:
        return _digits(e, self.l, self.d)

    def encode(self, coeffs) -> int:
        return _encode(coeffs, self.l)

    def from_int(self, n: int) -> int:
        return n % self.l

    def add(self, a: int, b: int) -> int:
        if self.d == 1:
            return (a + b) % self.l
        return self.encode((x + y) % self.l for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.d == 1:
            return -a % self.l
        return self.encode(-x % self.l for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.d == 1:
            return a * b % self.l
        l, d, mod = self.l, self.d, self.modulus
        x, y = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * d - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i] % l
            if c:
                for j in range(d):
                    prod[i - d + j] -= c * mod[j]
        return self.encode(c % l for c in prod[:d])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if self.d == 1:
            return pow(a, e, self.l)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # multiplicative structure ---------------------------------------------------------
    @property
    def generator(self) -> int:
        """Smallest (by encoding) primitive element."""
        if self._gen is None:
            n = self.q - 1
            cofactors = [n // r for r in factorint(n)]
            for g in range(2 if self.q > 2 else 1, self.q):
                if all(self.pow(g, c) != 1 for c in cofactors):
                    self._gen = g
                    break
        return self._gen

    def _mul_by_generator_matrix(self) -> np.ndarray:
        """d x d matrix of X -> g*X on coefficient vectors."""
        cols = []
        for i in range(self.d):
            basis = [0] * self.d
            basis[i] = 1
            cols.append(self.coeffs(self.mul(self.generator, self.encode(basis))))
        return np.array(cols, dtype=np.int64).T

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(log, zech) for the generator g.

        log[x] is the discrete log of x (log[0] = -1) and zech[i] = log(1 - g^i)
        (zech[0] = -1), so a - g^i = a * (1 - g^(i - log a)) costs one lookup.
        """
        if self._tables is not None:
            return self._tables
        if self.q > ENUMERATION_LIMIT:
            raise FieldTooLargeError(f"F_{self.l}^{self.d} has {self.q} elements (limit {ENUMERATION_LIMIT})")
        exp = self._powers_of_generator()
        n = self.q - 1
        log = np.full(self.q, -1, dtype=np.int32)
        log[exp] = np.arange(n, dtype=np.int32)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")  # pragma: no cover
        zech = log[self._neg_plus_one(exp)]
        self._tables = (log, zech)
        return self._tables

    def _neg_plus_one(self, e: np.ndarray) -> np.ndarray:
        """Encoding of 1 - x for every encoding x in e."""
        l = self.l
        out = np.zeros_like(e)
        rest = e
        weight = 1
        for i in range(self.d):
            digit = rest % l
            rest = rest // l
            new = ((1 if i == 0 else 0) - digit) % l
            out += new * weight
            weight *= l
        return out

    def _powers_of_generator(self) -> np.ndarray:
        """exp[i] = encoding of g^i for 0 <= i < q-1, built block by block."""
        l, d, n = self.l, self.d, self.q - 1
        M = self._mul_by_generator_matrix()
        block = max(1, isqrt(n))
        first = np.zeros((block, d), dtype=np.int64)
        vec = np.zeros(d, dtype=np.int64)
        vec[0] = 1
        for i in range(block):
            first[i] = vec
            vec = (M @ vec) % l
        # each later block is the previous one times g^block
        step = np.eye(d, dtype=np.int64)
        base, e = M.copy(), block
        while e:
            if e & 1:
                step = (step @ base) % l
            base = (base @ base) % l
            e >>= 1
        weights = l ** np.arange(d, dtype=np.int64)
        exp = np.empty(n + block, dtype=np.int64)
        cur = first
        pos = 0
        while pos < n:
            exp[pos:pos + block] = cur @ weights
            pos += block
            cur = (cur @ step.T) % l
        return exp[:n]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return int(self.tables()[0][a])

    def log_minus_one(self) -> int:
        return 0 if self.l == 2 else (self.q - 1) // 2


@lru_cache(maxsize=4)
def field(l: int, d: int = 1) -> FiniteField:
    """Cached field context (log tables are large, so only a few are kept)."""
    return FiniteField(l, d)


def prime_field(l: int) -> FiniteField:
    return field(l, 1)


def ext_field(l: int, d: int) -> FiniteField:
    return field(l, d)
