from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st
from sympy import isprime, n_order

from twistforge.algebra import CycInt
from twistforge.errors import BadReductionError, InvalidParameterError, SemanticError
from twistforge.ff import (
    Form,
    SuperCurve,
    char_sum_count,
    count_points,
    count_points_double_loop,
    field,
    is_pth_power,
    jacobi_sum,
    jacobi_sums,
    newton_polygon_slopes,
    semi_primitive_numerator,
    smallest_irreducible,
    zeta_numerator_jacobi,
    zeta_numerator_newton,
    zeta_report,
)
from twistforge.ff.zeta import power_sums_from_symmetric, symmetric_from_power_sums


# independent oracle: naive counting over F_l and F_l[s]/(s^2 - r) ---------------------------------

def _rhs(curve, x, mul, add, neg, pw, const):
    a = const(curve.a)
    if curve.form is Form.PLUS:
        return mul(pw(x, curve.m), add(x, a))
    return mul(pw(x, curve.m), pw(add(a, neg(x)), curve.k))


def oracle_count_prime(curve, l):
    ypow = {}
    for y in range(l):
        ypow.setdefault(pow(y, curve.p, l), []).append(y)
    total = 1
    for x in range(l):
        v = _rhs(curve, x, lambda s, t: s * t % l, lambda s, t: (s + t) % l, lambda s: -s % l,
                 lambda s, e: pow(s, e, l), lambda c: c % l)
        total += len(ypow.get(v, []))
    return total


def oracle_count_quadratic(curve, l):
    r = next(r for r in range(2, l) if pow(r, (l - 1) // 2, l) == l - 1)
    elems = [(i, j) for i in range(l) for j in range(l)]

    def mul(s, t):
        return ((s[0] * t[0] + r * s[1] * t[1]) % l, (s[0] * t[1] + s[1] * t[0]) % l)

    def pw(s, e):
        out = (1, 0)
        for _ in range(e):
            out = mul(out, s)
        return out

    ypow: dict = {}
    for y in elems:
        v = pw(y, curve.p)
        ypow[v] = ypow.get(v, 0) + 1
    total = 1
    for x in elems:
        v = _rhs(curve, x, mul, lambda s, t: ((s[0] + t[0]) % l, (s[1] + t[1]) % l),
                 lambda s: (-s[0] % l, -s[1] % l), pw, lambda c: (c % l, 0))
        total += ypow.get(v, 0)
    return total


curves = st.builds(
    lambda p, m, k, a, plus: SuperCurve(p, m, 1, a, Form.PLUS) if plus and m <= p - 2 else SuperCurve(p, m, k, a, Form.MINUS),
    st.sampled_from([3, 5, 7]),
    st.integers(1, 5),
    st.integers(1, 5),
    st.integers(-6, 6).filter(bool),
    st.booleans(),
).filter(lambda c: True)


def _curve_or_none(p, m, k, a, plus):
    try:
        if plus:
            return SuperCurve(p, m, 1, a, Form.PLUS)
        return SuperCurve(p, m, k, a, Form.MINUS)
    except SemanticError:
        return None


@given(st.sampled_from([3, 5, 7]), st.integers(1, 5), st.integers(1, 5), st.integers(-6, 6).filter(bool),
       st.booleans(), st.sampled_from([2, 3, 5, 7, 11, 13, 29, 31, 43]))
def test_counts_match_naive_oracle(p, m, k, a, plus, l):
    c = _curve_or_none(p, m, k, a, plus)
    assume(c is not None and c.has_good_reduction(l))
    F = field(l)
    n = count_points(c, F)
    assert n == oracle_count_prime(c, l)
    if (l - 1) % p == 0:
        assert n == char_sum_count(c, F)


@given(st.sampled_from([3, 5]), st.integers(1, 3), st.integers(-4, 4).filter(bool), st.sampled_from([3, 7, 11]))
def test_quadratic_extension_counts(p, k, a, l):
    c = _curve_or_none(p, 1, k, a, False)
    assume(c is not None and c.has_good_reduction(l))
    n = count_points(c, field(l, 2))
    assert n == oracle_count_quadratic(c, l)
    assert n == count_points_double_loop(c, field(l, 2))


def test_count_examples():
    plus = SuperCurve(5, 1, 1, 1, Form.PLUS)
    assert count_points(plus, field(7)) == 8
    assert count_points(plus, field(11)) == 13 == oracle_count_prime(plus, 11)
    F4 = field(2, 2)
    assert F4.modulus == (1, 1, 1)
    c = SuperCurve(3, 1, 1, 1)
    assert count_points(c, F4) == count_points_double_loop(c, F4) == char_sum_count(c, F4) == 9


def test_char_sum_examples():
    assert char_sum_count(SuperCurve(3, 1, 1, 1), field(7)) == count_points(SuperCurve(3, 1, 1, 1), field(7))
    assert char_sum_count(SuperCurve(5, 1, 1, 2), field(11)) == count_points(SuperCurve(5, 1, 1, 2), field(11))
    with pytest.raises(InvalidParameterError):
        char_sum_count(SuperCurve(5, 1, 1, 1), field(7))


def test_jacobi_sum_examples():
    tau = jacobi_sum(3, 1, 1, field(7))
    assert tau == CycInt(3, [1, 3])
    assert tau * tau.conjugate() == CycInt(3, [7])
    tau = jacobi_sum(5, 1, 1, field(11), 2)
    assert tau * tau.conjugate() == CycInt(5, [11])
    with pytest.raises(InvalidParameterError):
        jacobi_sum(5, 1, 1, field(7))


def test_jacobi_sum_against_brute_force():
    # tau = -sum chi(x) chi(1-x) with chi(3^i) = zeta^i over F_7 (3 generates F_7*)
    l, p = 7, 3
    log = {pow(3, i, l): i for i in range(l - 1)}
    counts = [0] * p
    for x in range(2, l):
        counts[(log[x] + log[(1 - x) % l]) % p] -= 1
    assert field(7).generator == 3
    assert jacobi_sum(3, 1, 1, field(7)) == CycInt.from_exponent_counts(p, counts)


@given(st.sampled_from([(3, 7, 1), (5, 11, 1), (7, 29, 1), (5, 2, 4), (3, 2, 2), (7, 2, 3)]), st.integers(1, 5), st.integers(1, 5))
def test_jacobi_norm(case, m, k):
    p, l, d = case
    assume(m + k < p)
    for tau in jacobi_sums(p, m, k, field(l, d)):
        assert tau * tau.conjugate() == CycInt(p, [l**d])


def test_zeta_examples():
    r = zeta_report(SuperCurve(7, 1, 2, 1), 2)
    assert r.P_coeffs == (1, 0, 0, 5, 0, 0, 8)
    assert r.is_ordinary()
    r = zeta_report(SuperCurve(5, 1, 1, 1), 2)
    assert r.P_coeffs == (1, 0, 0, 0, 4)
    assert Fraction(1, 2) in r.slopes and not r.is_ordinary()
    a = zeta_numerator_newton(SuperCurve(5, 1, 1, 1), 11)
    b = zeta_numerator_jacobi(SuperCurve(5, 1, 1, 1), 11)
    assert a.P_coeffs == b.P_coeffs == (1, 1, -9, 11, 121)


def test_zeta_against_naive_oracle():
    # genus 2: N_1, N_2 from the naive counter determine P
    c = SuperCurve(5, 1, 1, 1)
    n1, n2 = oracle_count_prime(c, 11), oracle_count_quadratic(c, 11)
    t = [11 + 1 - n1, 121 + 1 - n2]
    s = symmetric_from_power_sums(t)
    assert zeta_report(c, 11).P_coeffs[:3] == (1, -s[1], s[2])


@pytest.mark.parametrize("p,l", [(5, 2), (5, 3), (5, 7), (5, 13), (7, 3), (7, 13), (3, 5), (3, 11)])
def test_semi_primitive_formula(p, l):
    c = SuperCurve(p, 1, 1, 1)
    assert tuple(semi_primitive_numerator(p, l)) == zeta_numerator_newton(c, l).P_coeffs


@pytest.mark.parametrize("p,l", [(5, 2), (5, 3), (5, 7), (5, 13), (7, 3), (7, 5), (7, 17)])
def test_primitive_root_law(p, l):
    assert n_order(l, p) == p - 1
    for a in (1, 2, 3):
        c = SuperCurve(p, 1, 1, a)
        if c.has_good_reduction(l):
            assert zeta_report(c, l).jacobian_order == l ** ((p - 1) // 2) + 1


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_newton_identities_roundtrip(e_tail):
    e = [1] + e_tail
    t = power_sums_from_symmetric(e, len(e_tail))
    assert symmetric_from_power_sums(t) == e


@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(-5, 5).filter(bool), st.sampled_from([2, 3, 11, 13, 29, 43]))
def test_report_invariants(p, k, a, l):
    c = _curve_or_none(p, 1, k, a, False)
    assume(c is not None and c.has_good_reduction(l))
    r = zeta_report(c, l)
    assert r.functional_equation_holds()
    assert r.slopes_symmetric()
    assert r.jacobian_order > 0
    assert r.counts[0] == count_points(c, field(l))


def test_slopes_toy():
    assert newton_polygon_slopes([1, -6, 5], 5) == [0, 1]
    assert newton_polygon_slopes([1, 0, 0, 0, 4], 2) == [Fraction(1, 2)] * 4


def test_is_pth_power():
    assert is_pth_power(1, 29, 7)
    assert not is_pth_power(4, 29, 7)
    assert is_pth_power(2**7, 29, 7)
    assert is_pth_power(3, 11, 7)


def test_smallest_irreducible_is_irreducible():
    for l, d in [(2, 2), (2, 3), (3, 2), (5, 3), (2, 4)]:
        mod = smallest_irreducible(l, d)
        assert len(mod) == d + 1 and mod[-1] == 1
        # no roots in F_l at least, and the field really has a primitive element of order q-1
        F = field(l, d)
        assert F.pow(F.generator, F.q - 1) == 1
        log = F.tables()[0]
        assert sorted(log[1:].tolist()) == list(range(F.q - 1))


def test_reduction_and_parameter_errors():
    with pytest.raises(BadReductionError):
        count_points(SuperCurve(5, 1, 1, 3), field(3))
    with pytest.raises(BadReductionError):
        zeta_report(SuperCurve(5, 1, 1, 1), 5)
    with pytest.raises(SemanticError):
        SuperCurve(5, 2, 3, 1)
    with pytest.raises(SemanticError):
        SuperCurve(5, 4, 1, 1, Form.PLUS)
    with pytest.raises(InvalidParameterError):
        zeta_report(SuperCurve(5, 1, 1, 1), 3, method="magic")


def test_plus_minus_equivalence():
    for p, m, a, l in [(5, 1, 1, 11), (5, 2, 3, 31), (7, 3, 2, 29)]:
        plus, minus = SuperCurve(p, m, 1, a, Form.PLUS), SuperCurve(p, m, 1, a, Form.MINUS)
        assert plus.to_minus() == minus
        assert count_points(plus, field(l)) == count_points(minus, field(l))


@pytest.mark.parametrize("p,k,a,l", [(5, 1, 1, 11), (5, 2, 3, 31), (7, 2, 1, 29), (3, 1, 2, 7), (7, 1, 1, 2)])
def test_jacobi_and_newton_reports_agree(p, k, a, l):
    c = SuperCurve(p, 1, k, a)
    n, j = zeta_numerator_newton(c, l), zeta_numerator_jacobi(c, l)
    assert n.P_coeffs == j.P_coeffs
    assert n.counts == j.counts
