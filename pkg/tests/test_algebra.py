"""Unit tests for the exact algebra layer: spectral polynomials, exponential
coefficients, rational functions, and the Element calculus."""

from fractions import Fraction

import pytest

from bispectral.basis import WeightedBasis, vec
from bispectral.element import (
    Element,
    exact_divide,
    restrict_to_hyperplane,
    shift_substitute,
)
from bispectral.errors import NotDivisible, ZeroVector
from bispectral.exppoly import ExpPoly, cosh_factor, sinh_factor
from bispectral.kpoly import KPoly
from bispectral.ratfun import RationalFn

F = Fraction


def test_inner_product_weights():
    b = WeightedBasis([3, 3])
    assert b.inner(vec([1, 0]), vec([1, 0])) == 3
    half = vec(["1/2", "1/2"])
    assert b.norm(half) == F(3, 2)
    b2 = WeightedBasis([-2, 1, 1])
    assert b2.norm(vec([1, -1, 0])) == -1


def test_shift_kpoly_c2_weights():
    # kappa_1 shifted by f_1 over C2(1,1) weights (3,3): kappa_1 + 3
    b = WeightedBasis([3, 3])
    p = KPoly.variable(2, 0)
    shifted = shift_substitute(p, vec([1, 0]), b)
    assert shifted == KPoly.linear_form([1, 0], 3)


def test_shift_kpoly_negative_weight():
    # kappa_0^2 shifted by 2*ebar_0 over weights (-2,1,1): (kappa_0 - 4)^2
    b = WeightedBasis([-2, 1, 1])
    p = KPoly.variable(3, 0) ** 2
    shifted = shift_substitute(p, vec([2, 0, 0]), b)
    expected = KPoly.linear_form([1, 0, 0], -4) ** 2
    assert shifted == expected
    assert shifted.terms[(0, 0, 0)] == 16
    assert shifted.terms[(1, 0, 0)] == -8


def test_shift_fixes_constants():
    b = WeightedBasis([3, 3])
    p = KPoly.const(2, 5)
    assert shift_substitute(p, vec([7, -2]), b) == p


def test_shift_round_trip():
    b = WeightedBasis([3, -2])
    p = KPoly.linear_form([2, -1], 4) ** 3
    tau = vec(["1/2", 3])
    assert shift_substitute(shift_substitute(p, tau, b), vec([-F(1, 2), -3]), b) == p


def test_restrict_defining_form_vanishes():
    alpha = vec([1, 2, -1])
    form = KPoly.linear_form([1, 2, -1])
    assert restrict_to_hyperplane(form, alpha).is_zero()


def test_restrict_difference_form():
    alpha = vec([0, 1, -1])
    p = KPoly.linear_form([0, 1, -1])
    assert restrict_to_hyperplane(p, alpha).is_zero()


def test_restrict_product_pivot():
    # kappa_1*kappa_2 on kappa_1 + kappa_2 = 0 (pivot kappa_2) -> -kappa_1^2
    alpha = vec([1, 1])
    p = KPoly.variable(2, 0) * KPoly.variable(2, 1)
    got = restrict_to_hyperplane(p, alpha)
    assert got == (KPoly.variable(2, 0) ** 2).scale(-1)


def test_restrict_zero_vector_raises():
    with pytest.raises(ZeroVector):
        restrict_to_hyperplane(KPoly.variable(2, 0), vec([0, 0]))


def test_dderiv_plane_wave():
    b = WeightedBasis([3, 3])
    one = Element.one(b)
    d0 = one.dderiv(0)
    assert d0 == Element.from_kpoly(KPoly.variable(2, 0), b)


def test_dderiv_exp_monomial():
    # e^{xbar_1} over weights (3,3): derivative along f_1 is (3 + kappa_1) e^{xbar_1}
    b = WeightedBasis([3, 3])
    e = Element(b, {(0, 0): ExpPoly.monomial((2, 0))})
    d = e.dderiv(0)
    assert d.coefficient((0, 0)) == ExpPoly.monomial((2, 0), 3)
    assert d.coefficient((1, 0)) == ExpPoly.monomial((2, 0))


def test_laplacian_eigenvalue():
    b = WeightedBasis([3, -2, F(1, 2)])
    one = Element.one(b)
    lap = one.laplacian()
    kk = KPoly.zero(3)
    for i, w in enumerate(b.weights):
        kk = kk + (KPoly.variable(3, i) ** 2).scale(1 / w)
    assert lap == Element.from_kpoly(kk, b)


def test_exact_divide_difference_of_squares():
    b = WeightedBasis([1, 1])
    e_coeff = ExpPoly(2, {(2, 0): F(3), (0, -2): F(-1, 2)})
    num_poly = (KPoly.variable(2, 0) ** 2 - KPoly.const(2, 9))
    num = Element.from_kpoly(num_poly, b).mul_exppoly(e_coeff)
    den = KPoly.linear_form([1, 0], -3)
    q = exact_divide(num, den)
    expected = Element.from_kpoly(KPoly.linear_form([1, 0], 3), b).mul_exppoly(e_coeff)
    assert q == expected


def test_exact_divide_failure_carries_remainder():
    b = WeightedBasis([1, 1])
    num = Element.from_kpoly(KPoly.variable(2, 0), b)
    with pytest.raises(NotDivisible) as exc:
        exact_divide(num, KPoly.variable(2, 1))
    assert not exc.value.remainder.is_zero()


def test_exact_divide_zero():
    b = WeightedBasis([1, 1])
    assert exact_divide(Element.zero(b), KPoly.variable(2, 1)).is_zero()


def test_exppoly_division_exact_and_inexact():
    s = sinh_factor(2, vec([1, -1]))
    c = cosh_factor(2, vec([1, -1]))
    prod = s * c
    assert prod.exact_div(s) == c
    q, r = c.divmod_by(s)
    assert not r.is_zero()


def test_rationalfn_cross_multiplication():
    n = 2
    k1 = KPoly.variable(n, 0)
    k2 = KPoly.variable(n, 1)
    a = RationalFn.quotient(k1 * k2, k1 + k2)
    scaled = RationalFn.quotient((k1 * k2) * (k1 - k2), (k1 + k2) * (k1 - k2))
    assert a.equals(scaled)
    assert not a.equals(RationalFn.quotient(k1, k1 + k2))


def test_rationalfn_reduction_keeps_value():
    n = 2
    k1 = KPoly.variable(n, 0)
    k2 = KPoly.variable(n, 1)
    # ((k1+k2)*(k1-k2)) / (k1+k2) reduces to k1-k2
    r = RationalFn.quotient((k1 + k2) * (k1 - k2), k1 + k2)
    assert not r.den
    assert r.num == k1 - k2


def test_rationalfn_addition_lcm():
    n = 1
    x = KPoly.variable(n, 0)
    one = KPoly.const(n, 1)
    a = RationalFn.quotient(one, x)  # 1/x
    b = RationalFn.quotient(one, x + one)  # 1/(x+1)
    s = a + b  # (2x+1)/(x(x+1))
    assert s.num == x.scale(2) + one
    assert s.den_expanded() == x * (x + one)
    # adding the negation gives an exact zero
    z = s - s
    assert z.is_zero()


def test_rationalfn_shift_normalizes_factors():
    n = 2
    k1 = KPoly.variable(n, 0)
    k2 = KPoly.variable(n, 1)
    b = WeightedBasis([3, 3])
    r = RationalFn.quotient(KPoly.const(n, 1), k1 - k2)
    shifted = r.shift(b.shift_deltas(vec([1, 0])))
    # 1/(k1 - k2 + 3)
    assert shifted.den_expanded() == k1 - k2 + KPoly.const(n, 3)


def test_element_shift_substitute_matches_kpoly():
    b = WeightedBasis([3, 3])
    p = (KPoly.variable(2, 0) + KPoly.variable(2, 1)) ** 2
    el = Element.from_kpoly(p, b)
    tau = vec([1, -1])
    shifted = el.shift_substitute(tau)
    assert shifted == Element.from_kpoly(shift_substitute(p, tau, b), b)
