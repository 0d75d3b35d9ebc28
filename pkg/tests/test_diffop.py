import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from gaudin.closedform import admissible_lengths
from gaudin.diffop import (ExcludedCase, UnsupportedType, build_operator, check_operator_identity,
                           expand, exponent_profile, kernel_is_polynomial, log_derivative, operator_pair)
from gaudin.polyalg import Poly, QuasiPoly, RationalFn
from gaudin.rootsys import parse_datum

x = Poly.x()
ONE = Poly.const(1)


def test_composition_example():
    c = expand([RationalFn(ONE, x), RationalFn(0)])
    assert c == [RationalFn(0), -RationalFn(ONE, x), RationalFn(1)]


def test_two_factor_product_rule():
    # (d - f)(d - g) = d^2 - (f + g) d + (f g - g')
    f = log_derivative(x - Q(1, 3))
    g = log_derivative(x ** 2 + 1)
    c = expand([f, g])
    assert c[2] == RationalFn(1)
    assert c[1] == -(f + g)
    assert c[0] == f * g - g.deriv()


def test_log_derivative_quasi():
    u = QuasiPoly.make(Q(5, 2), x - 1)
    assert log_derivative(u) == RationalFn(Poly.const(Q(5, 2)), x) + RationalFn(ONE, x - 1)
    with pytest.raises(ZeroDivisionError):
        log_derivative(Poly())


def test_b2_length_one(B2):
    assert exponent_profile(B2, (1, 1), "1") == (2, 0)
    lhs, rhs = operator_pair(B2, (1, 1), "1")
    assert lhs.order == 4
    assert lhs == rhs
    assert kernel_is_polynomial(B2, (1, 1), "1")


def test_length_zero_identity(B2, C3):
    assert exponent_profile(B2, (2, 3), "0") == (0, 0)
    assert check_operator_identity(B2, (2, 3), "0")
    assert check_operator_identity(C3, (1, 0, 2), "0")


def test_c3_length_four(C3):
    assert exponent_profile(C3, (1, 1, 1), "4") == (10, 8, 4)
    assert check_operator_identity(C3, (1, 1, 1), "4")
    assert build_operator(C3, (1, 1, 1), [ONE, ONE, ONE]).order == 7


def test_excluded_and_unsupported(B2, D4):
    with pytest.raises(ExcludedCase):
        exponent_profile(B2, (1, 2), "2")
    with pytest.raises(UnsupportedType):
        build_operator(D4, (0, 0, 0, 0), [ONE] * 4)


def test_wrong_tuple_does_not_factor(B2):
    _, rhs = operator_pair(B2, (1, 1), "1")
    assert build_operator(B2, (1, 1), [x - Q(1, 3), ONE]) != rhs


@pytest.mark.parametrize("fam,r", [("B", 2), ("B", 3), ("C", 3)])
def test_identity_sample(fam, r):
    d = parse_datum(fam, r)
    rng = random.Random(5)
    for _ in range(4):
        lam = tuple(rng.randint(0, 3) for _ in range(r))
        for lb in admissible_lengths(d, lam):
            if fam == "B" and lb.value == r:
                continue
            assert check_operator_identity(d, lam, lb)


def test_kernel_polynomial_sample(C3):
    for lam in [(1, 0, 0), (0, 1, 1), (2, 1, 0)]:
        for lb in admissible_lengths(C3, lam):
            assert kernel_is_polynomial(C3, lam, lb)


def apply_coeffs(coeffs, p):
    out, d = RationalFn(0), p
    for c in coeffs:
        out = out + c * RationalFn(d)
        d = d.deriv()
    return out


small = st.fractions(min_value=-5, max_value=5, max_denominator=5)
polys = st.lists(small, min_size=2, max_size=4).map(Poly).filter(lambda p: p.degree >= 1)


@given(polys, polys, st.lists(small, min_size=1, max_size=5).map(Poly))
def test_expansion_matches_sequential_application(u, v, p):
    f, g = log_derivative(u), log_derivative(v)
    step = RationalFn(p).deriv() - g * RationalFn(p)
    assert apply_coeffs(expand([f, g]), p) == step.deriv() - f * step


@given(polys)
def test_factor_kills_its_argument(u):
    # (d - ln'(u)) u = 0
    assert apply_coeffs(expand([log_derivative(u)]), u).is_zero()
