from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from twistforge.errors import AnomalyError, InvalidParameterError
from twistforge.ff import Form, SuperCurve, jacobian_order
from twistforge.torsion import (
    auxiliary_prime,
    gr_two_torsion_condition,
    hyperelliptic_models,
    is_primitive_root,
    l7_forward_map,
    no_two_torsion_odd_a,
    pth_power_free,
    torsion_bound,
    two_sample_orders,
    two_torsion_special,
    verify_l7_equivalences,
)


def test_certificate_p5():
    cert = torsion_bound(SuperCurve(5, 1, 1, 1, Form.PLUS), 10, 500)
    assert len(cert.sampled) == 10
    assert cert.order_gcd % 5 == 0 and 10 % cert.order_gcd == 0
    assert cert.ok() and cert.contains_Zp
    for s in cert.sampled:
        assert s.l % 2 == 1 and is_primitive_root(s.l, 5)
        assert s.jacobian_order % cert.order_gcd == 0
        assert s.jacobian_order == s.l**2 + 1
    flavors = {f for s in cert.sampled for f in s.flavors}
    assert flavors == {"l=1 mod 4", f"l=1 mod {auxiliary_prime(5)}", "primitive root"}
    assert cert.order_gcd == 10


def test_certificate_p7():
    cert = torsion_bound(SuperCurve(7, 1, 1, 1, Form.PLUS), 6, 500)
    assert cert.order_gcd == 14 and cert.ok()


def test_certificate_is_deterministic_and_parallel_safe():
    c = SuperCurve(5, 1, 1, 1, Form.PLUS)
    a = torsion_bound(c, 5, 300, jobs=1, seed=3).to_dict()
    b = torsion_bound(c, 5, 300, jobs=2, seed=3).to_dict()
    assert a == b


def test_certificate_errors():
    c = SuperCurve(5, 1, 1, 1, Form.PLUS)
    with pytest.raises(InvalidParameterError):
        torsion_bound(c, 0, 500)
    with pytest.raises(InvalidParameterError):
        torsion_bound(c, 10, 20)


def test_pth_power_free():
    assert pth_power_free(2 * 7**7, 7) == (2, 7)
    assert pth_power_free(-96, 5) == (3, 2)
    assert pth_power_free(8, 5) == (8, 1)
    with pytest.raises(InvalidParameterError):
        pth_power_free(0, 5)


@given(st.integers(1, 10**6), st.sampled_from([3, 5, 7]))
def test_pth_power_free_property(a, p):
    a0, s = pth_power_free(a, p)
    assert a0 * s**p == a
    assert all(e < p for e in sp.factorint(a0).values())


def test_gr_condition():
    assert gr_two_torsion_condition(7, 1, 2)
    assert not gr_two_torsion_condition(7, 1, 1)
    assert not gr_two_torsion_condition(5, 1, 2)
    with pytest.raises(InvalidParameterError):
        gr_two_torsion_condition(7, 3, 4)
    with pytest.raises(InvalidParameterError):
        gr_two_torsion_condition(7, 0, 2)


def test_two_torsion_special():
    assert two_torsion_special(5, 1, 2)
    assert not two_torsion_special(5, 1, 3)
    assert two_torsion_special(5, 2, 8)
    assert two_torsion_special(5, 3, 8)
    assert two_torsion_special(5, 1, 2 * 3**5)
    assert not two_torsion_special(5, 2, 2)
    with pytest.raises(InvalidParameterError):
        two_torsion_special(7, 2, 2)


def test_two_torsion_even_orders():
    # a = 2, k = 1: a rational 2-torsion point forces every #J(F_l) to be even
    orders = two_sample_orders(SuperCurve(5, 1, 1, 2), 60)
    assert orders[3] == 10 and orders[7] == 50 and orders[13] == 170
    assert all(n % 2 == 0 for n in orders.values())
    # for a = 3 the orders are not all even
    assert any(n % 2 for n in two_sample_orders(SuperCurve(5, 1, 1, 3), 60).values())


def test_no_two_torsion_odd_a():
    v = no_two_torsion_odd_a(5, 1)
    assert not v.has_two_torsion and Fraction(1, 2) in v.slopes
    assert v.P_coeffs == (1, 0, 0, 0, 4)
    v = no_two_torsion_odd_a(11, 3)
    assert any(0 < s < 1 for s in v.slopes)
    with pytest.raises(InvalidParameterError):
        no_two_torsion_odd_a(7, 1, 1, 2)
    with pytest.raises(InvalidParameterError):
        no_two_torsion_odd_a(5, 2)


@pytest.mark.parametrize("p", [3, 5, 11, 13])
@pytest.mark.parametrize("a", [1, 3, 5, -7])
def test_odd_a_never_ordinary_at_2(p, a):
    for k in range(1, p - 1):
        v = no_two_torsion_odd_a(p, a, 1, k)
        assert not set(v.slopes) <= {0, 1}


def test_p7_ordinary_case_would_be_an_anomaly():
    from twistforge.ff import zeta_report

    assert zeta_report(SuperCurve(7, 1, 2, 1), 2).is_ordinary()


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("a", [1, 2, 3, -1])
def test_l7_equivalences(p, a):
    r = verify_l7_equivalences(p, a)
    assert r.all_passed, r.to_dict()


def test_l7_example_models():
    r = verify_l7_equivalences(5, 3)
    assert r.all_passed
    assert hyperelliptic_models(5, 3) == (4**4 * 9, 12**4)
    assert r.models == ("y^2 = x^5 + 2304", "y^2 = x^5 + 20736")


def test_l7_perturbed_map_fails():
    F = l7_forward_map(5, Fraction(3))

    def flipped(x, y):
        X, Y = F(x, y)
        return X, -Y

    r = verify_l7_equivalences(5, 3, forward=flipped)
    assert not r.check("F maps C^{a,1,(p-1)/2} into C^{a,1,p-2}").passed
    assert r.check("F maps C^{a,1,(p-1)/2} into C^{a,1,p-2}").residual != "0"


@pytest.mark.parametrize("p,a", [(5, 3), (7, 2), (3, -1)])
def test_models_with_sympy(p, a):
    # independent route: reduce modulo y^2 - x^p - c in sympy
    X, Y = sp.symbols("X Y")
    c1, c2 = (sp.Rational(c.numerator, c.denominator) for c in hyperelliptic_models(p, a))
    half = (p - 1) // 2

    def vanishes(expr, c):
        num = sp.numer(sp.together(expr))
        return sp.rem(sp.expand(num), Y**2 - X**p - c, Y) == 0

    sx, sy = Y / 2**p + sp.Rational(a, 2), -X / 4
    assert vanishes(sy**p - sx * (a - sx), c1)
    s = Y / (2**p * sp.Integer(a) ** half) - sp.Rational(1, 2)
    r = 4 * sp.Integer(a) / X
    sx, sy = a - r**p * s, r ** (p - 1) * s
    assert vanishes(sy**p - sx * (a - sx) ** (p - 2), c2)


def test_jacobian_order_parity_of_primitive_root_law():
    # l primitive root mod 5: #J = l^2 + 1 is even for odd l
    for l in (3, 7, 13, 17):
        assert jacobian_order(SuperCurve(5, 1, 1, 1), l) == l**2 + 1
