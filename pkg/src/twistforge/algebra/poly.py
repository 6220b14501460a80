"""Sparse multivariate polynomials over Q or Q(zeta_n).

Variables come from the fixed universe ``u, v, w, t, x``; exponent vectors are
5-tuples in that order.  Monomials are ordered graded-lexicographically with
u < v < w < t < x, so the leading term of ``x + u^2`` is ``u^2`` and the
leading term of ``x*u + u*v`` is ``x*u``.

Rational-coefficient polynomials are backed by python-flint's ``fmpq_mpoly``
for multiplication, exact division and gcd.  Cyclotomic-coefficient
polynomials use plain dictionaries of :class:`CycInt` coefficients and a
recursive primitive-PRS gcd.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping

import flint

from .cyclotomic import CycInt

VARIABLES = ("u", "v", "w", "t", "x")
NVARS = len(VARIABLES)
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXP = (0,) * NVARS
_CTX = flint.fmpq_mpoly_ctx.get(VARIABLES, "deglex")


def var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


def grlex_key(exp: tuple[int, ...]) -> tuple[int, ...]:
    return (sum(exp), exp[4], exp[3], exp[2], exp[1], exp[0])


def _to_fmpq(c) -> flint.fmpq:
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _from_fmpq(c) -> Fraction | int:
    q = int(c.q)
    return int(c.p) if q == 1 else Fraction(int(c.p), q)


class MultiPoly:
    """Immutable polynomial in u, v, w, t, x.

    ``field`` is ``None`` for rational coefficients and ``n`` for Q(zeta_n).
    """

    __slots__ = ("field", "_terms", "_fl", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None, field: int | None = None):
        self.field = field
        self._fl = None
        self._hash = None
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != NVARS or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp}")
            c = _coerce_coeff(c, field)
            if c:
                clean[exp] = clean[exp] + c if exp in clean else c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean

    # construction ---------------------------------------------------------
    @classmethod
    def _from_flint(cls, fl) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.field = None
        obj._terms = None
        obj._fl = fl
        obj._hash = None
        return obj

    @classmethod
    def _from_clean(cls, terms: dict, field: int | None) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj._terms = terms
        obj._fl = None
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, field: int | None = None) -> "MultiPoly":
        return cls({_ZERO_EXP: c}, field)

    @classmethod
    def zero(cls, field: int | None = None) -> "MultiPoly":
        return cls._from_clean({}, field)

    @classmethod
    def one(cls, field: int | None = None) -> "MultiPoly":
        return cls.constant(1, field)

    @classmethod
    def var(cls, name: str, field: int | None = None) -> "MultiPoly":
        exp = [0] * NVARS
        exp[var_index(name)] = 1
        return cls({tuple(exp): 1}, field)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, field: int | None = None) -> "MultiPoly":
        exp = [0] * NVARS
        for name, e in exps.items():
            exp[var_index(name)] += e
        return cls({tuple(exp): coeff}, field)

    @classmethod
    def from_univariate(cls, coeffs: Iterable, name: str = "x", field: int | None = None) -> "MultiPoly":
        """Build sum coeffs[i] * name^i."""
        idx = var_index(name)
        terms = {}
        for i, c in enumerate(coeffs):
            exp = [0] * NVARS
            exp[idx] = i
            terms[tuple(exp)] = c
        return cls(terms, field)

    # storage views ----------------------------------------------------------
    @property
    def terms(self) -> dict:
        """Mapping exponent vector -> nonzero coefficient."""
        if self._terms is None:
            self._terms = {tuple(int(k) for k in e): _from_fmpq(c) for e, c in self._fl.terms()}
        return self._terms

    @property
    def _flint(self):
        if self._fl is None:
            if self.field is not None:
                raise TypeError("flint backend only holds rational polynomials")
            self._fl = _CTX.from_dict({e: _to_fmpq(c) for e, c in self._terms.items()}) if self._terms else _CTX.from_dict({})
        return self._fl

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # basic queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        if self._fl is not None:
            return self._fl.is_zero()
        return not self._terms

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_ZERO_EXP, _coerce_coeff(0, self.field))

    def __len__(self) -> int:
        return len(self.terms)

    def leading_term(self) -> tuple[tuple, object]:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def degree(self, name: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for zero."""
        if self.is_zero():
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = var_index(name)
        return max(e[i] for e in self.terms)

    def variables(self) -> tuple[str, ...]:
        used = [False] * NVARS
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(VARIABLES[i] for i in range(NVARS) if used[i])

    def is_rational_valued(self) -> bool:
        """True if every coefficient is rational (whatever the field tag)."""
        if self.field is None:
            return True
        return all(c.is_rational() for c in self.terms.values())

    # field changes ------------------------------------------------------------
    def lift(self, n: int | None) -> "MultiPoly":
        """View in Q(zeta_n) (``n=None`` leaves rational polynomials alone)."""
        if n == self.field:
            return self
        if self.field is not None:
            if n is None:
                return self.to_rational()
            raise ValueError(f"cannot move Q(zeta_{self.field}) coefficients into Q(zeta_{n})")
        return MultiPoly._from_clean({e: CycInt(n, [c]) for e, c in self.terms.items()}, n)

    def to_rational(self) -> "MultiPoly":
        if self.field is None:
            return self
        return MultiPoly({e: c.to_rational() for e, c in self.terms.items()}, None)

    def map_coefficients(self, fn: Callable) -> "MultiPoly":
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, self.field)

    # arithmetic ------------------------------------------------------------------
    def _common(self, other) -> tuple["MultiPoly", "MultiPoly"]:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (Rational, CycInt)):
                fld = other.n if isinstance(other, CycInt) else None
                other = MultiPoly.constant(other, fld)
            else:
                raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")
        if self.field == other.field:
            return self, other
        if self.field is None:
            return self.lift(other.field), other
        if other.field is None:
            return self, other.lift(self.field)
        raise ValueError(f"cannot mix Q(zeta_{self.field}) and Q(zeta_{other.field})")

    def __add__(self, other):
        a, b = self._common(other)
        if a.field is None:
            return MultiPoly._from_flint(a._flint + b._flint)
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._from_clean(out, a.field)

    __radd__ = __add__

    def __neg__(self):
        if self.field is None:
            return MultiPoly._from_flint(-self._flint)
        return MultiPoly._from_clean({e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        a, b = self._common(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._common(other)
        return b + (-a)

    def __mul__(self, other):
        a, b = self._common(other)
        if a.field is None:
            return MultiPoly._from_flint(a._flint * b._flint)
        if a.is_zero() or b.is_zero():
            return MultiPoly.zero(a.field)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    s = out[e] + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
                elif c:
                    out[e] = c
        return MultiPoly._from_clean(out, a.field)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        if self.field is None:
            return MultiPoly._from_flint(self._flint ** e)
        result = MultiPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        """Multiply by a scalar of the coefficient field."""
        return self * c

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ArithmeticError when the division leaves a remainder."""
        a, b = self._common(other)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if a.field is None:
            try:
                return MultiPoly._from_flint(a._flint / b._flint)
            except Exception as exc:  # flint DomainError
                raise ArithmeticError("inexact polynomial division") from exc
        q, r = _divmod_generic(a, b)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "MultiPoly":
        if self.is_zero():
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self * (Fraction(1) / lc if self.field is None else lc.inverse())

    def derivative(self, name: str) -> "MultiPoly":
        i = var_index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(out, self.field)

    # evaluation and composition --------------------------------------------------
    def evaluate(self, point: Mapping[str, object]):
        """Value at a point binding every variable that occurs."""
        missing = [v for v in self.variables() if v not in point]
        if missing:
            raise ValueError(f"unbound variables {missing}")
        vals = [point.get(name, 0) for name in VARIABLES]
        cache: dict = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in cache:
                cache[key] = vals[i] ** k
            return cache[key]

        total = _coerce_coeff(0, self.field)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def compose(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables; unbound variables pass through."""
        if not bindings:
            return self
        images = []
        fld = self.field
        for name in VARIABLES:
            img = bindings.get(name)
            if img is None:
                img = MultiPoly.var(name)
            elif not isinstance(img, MultiPoly):
                img = MultiPoly.constant(img, img.n if isinstance(img, CycInt) else None)
            images.append(img)
            if img.field is not None:
                if fld is not None and fld != img.field:
                    raise ValueError("incompatible cyclotomic fields in composition")
                fld = img.field
        if fld is None:
            return MultiPoly._from_flint(self._flint.compose(*[g._flint for g in images]))
        images = [g.lift(fld) for g in images]
        base = self.lift(fld)
        powers: dict = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        total = MultiPoly.zero(fld)
        for e, c in base.terms.items():
            term = MultiPoly.constant(c, fld)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    # comparison --------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (Rational, CycInt)):
            other = MultiPoly.constant(other, other.n if isinstance(other, CycInt) else None)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.field is None and other.field is None:
            return self._flint == other._flint
        try:
            a, b = self._common(other)
        except ValueError:
            return False
        return a.terms == b.terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational_valued():
                items = {e: (c if self.field is None else c.to_rational()) for e, c in self.terms.items()}
            else:
                items = self.terms
            self._hash = hash(frozenset(items.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}{'' if self.field is None else f', field={self.field}'})"

    def __str__(self) -> str:
        from .printing import format_poly

        return format_poly(self)


def _coerce_coeff(c, field: int | None):
    if field is None:
        if isinstance(c, CycInt):
            c = c.to_rational()
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else c
        if isinstance(c, Rational):
            return Fraction(c)
        raise TypeError(f"coefficient {c!r} is not rational")
    if isinstance(c, CycInt):
        if c.n != field:
            raise ValueError(f"coefficient in Q(zeta_{c.n}) used in Q(zeta_{field})")
        return c
    return CycInt(field, [c])


# generic-field algorithms (used for cyclotomic coefficients and as an oracle) -------

def _divmod_generic(a: MultiPoly, b: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Multivariate division by leading terms; remainder keeps undivisible terms."""
    fld = a.field
    lexp, lc = b.leading_term()
    inv = (1 / Fraction(lc)) if fld is None else lc.inverse()
    b_terms = list(b.terms.items())
    rem = dict(a.terms)
    quot: dict = {}
    leftover: dict = {}
    while rem:
        exp = max(rem, key=grlex_key)
        c = rem.pop(exp)
        shift = tuple(x - y for x, y in zip(exp, lexp))
        if any(s < 0 for s in shift):
            leftover[exp] = c
            continue
        qc = c * inv
        quot[shift] = qc
        for be, bc in b_terms:
            if be == lexp:
                continue
            e = tuple(x + y for x, y in zip(be, shift))
            val = rem.get(e, 0) - qc * bc
            if val:
                rem[e] = val
            else:
                rem.pop(e, None)
    return MultiPoly(quot, fld), MultiPoly(leftover, fld)


def _coeffs_in(p: MultiPoly, i: int) -> dict[int, MultiPoly]:
    """Split p as sum_k c_k * var_i^k with c_k free of var_i."""
    parts: dict[int, dict] = {}
    for e, c in p.terms.items():
        k = e[i]
        ne = e[:i] + (0,) + e[i + 1:]
        parts.setdefault(k, {})[ne] = c
    return {k: MultiPoly._from_clean(t, p.field) for k, t in parts.items()}


def _from_coeffs(parts: Mapping[int, MultiPoly], i: int, field) -> MultiPoly:
    out: dict = {}
    for k, c in parts.items():
        for e, val in c.terms.items():
            ne = e[:i] + (e[i] + k,) + e[i + 1:]
            out[ne] = val
    return MultiPoly._from_clean(out, field)


def _content(p: MultiPoly, i: int) -> MultiPoly:
    g = None
    for c in _coeffs_in(p, i).values():
        g = c if g is None else gcd_generic(g, c)
        if g.is_constant():
            return MultiPoly.one(p.field)
    return g if g is not None else MultiPoly.zero(p.field)


def _prem(a: MultiPoly, b: MultiPoly, i: int) -> MultiPoly:
    db = b.degree(VARIABLES[i])
    bparts = _coeffs_in(b, i)
    lcb = bparts[db]
    xi = MultiPoly.var(VARIABLES[i], a.field)
    r = a
    e = a.degree(VARIABLES[i]) - db + 1
    while not r.is_zero() and r.degree(VARIABLES[i]) >= db:
        dr = r.degree(VARIABLES[i])
        lcr = _coeffs_in(r, i)[dr]
        r = r * lcb - lcr * (xi ** (dr - db)) * b
        e -= 1
    return r * (lcb ** e) if e > 0 else r


def gcd_generic(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd by content / primitive-part recursion over any coefficient field."""
    fld = a.field if a.field is not None else b.field
    a, b = a.lift(fld), b.lift(fld)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return MultiPoly.one(fld)
    used = set(a.variables()) | set(b.variables())
    name = next(v for v in VARIABLES if v in used)
    i = var_index(name)
    if a.degree(name) == 0:
        return gcd_generic(a, _content(b, i)).monic()
    if b.degree(name) == 0:
        return gcd_generic(_content(a, i), b).monic()
    ca, cb = _content(a, i), _content(b, i)
    c = gcd_generic(ca, cb)
    ap, bp = a.divexact(ca), b.divexact(cb)
    if ap.degree(name) < bp.degree(name):
        ap, bp = bp, ap
    while True:
        r = _prem(ap, bp, i)
        if r.is_zero():
            g = bp
            break
        if r.degree(name) == 0:
            g = MultiPoly.one(fld)
            break
        ap, bp = bp, r.divexact(_content(r, i))
    if g.degree(name) > 0:
        g = g.divexact(_content(g, i))
    return (c * g).monic()


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic (graded-lex) gcd of two polynomials."""
    if a.field is None and b.field is None:
        return MultiPoly._from_flint(a._flint.gcd(b._flint)).monic()
    if a.is_rational_valued() and b.is_rational_valued():
        fld = a.field if a.field is not None else b.field
        g = poly_gcd(a.to_rational(), b.to_rational())
        return g.lift(fld)
    return gcd_generic(a, b)
