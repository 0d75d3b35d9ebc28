from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from gaudin.polyalg import (NoSolution, Poly, QuasiPoly, RationalFn, solve_wronskian,
                            squarefree_and_coprime_checks, wronskian)

x = Poly.x()


def test_wronskian_values():
    # W(f, g) = f'g - fg'
    assert wronskian(x ** 2, x ** 3) == -(x ** 4)
    assert wronskian(x - Q(3, 4), x ** 4) == Poly([0, 0, 0, 3, -3])  # 3x^3(1 - x)


def test_wronskian_opposite_sign_convention():
    # the values f g' - f' g are exactly the negatives
    assert -wronskian(x ** 2, x ** 3) == x ** 4
    assert -wronskian(x - Q(3, 4), x ** 4) == Poly([0, 0, 0, -3, 3])


def test_wronskian_quasi():
    f = QuasiPoly.make(Q(1, 2), Poly.const(1))
    g = QuasiPoly.make(Q(3, 2), Poly.const(1))
    assert wronskian(f, g) == QuasiPoly.make(1, Poly.const(-1))


def test_solve_wronskian_antiderivative():
    sol = solve_wronskian(Poly.const(1), x ** 2, 0)
    assert sol.poly == x ** 3
    assert sol.scale == Q(-1, 3)
    assert wronskian(Poly.const(1), sol.raw) == x ** 2


def test_solve_wronskian_replays_b2_step():
    # lambda = (1, 1): u1 = x - 3/4 and W(u1, x^4 q) = x^3 (x - 1) with q constant
    u1 = x - Q(3, 4)
    sol = solve_wronskian(u1, (x ** 3) * (x - 1), 4)
    assert sol.poly == Poly.const(1)
    assert sol.scale == Q(-1, 3)
    assert wronskian(u1, sol.quasi) == QuasiPoly.of((x ** 3) * (x - 1))


def test_solve_wronskian_no_solution():
    with pytest.raises(NoSolution):
        solve_wronskian(x - Q(3, 4), x ** 2, 0, degree=5)
    with pytest.raises(NoSolution):
        solve_wronskian(Poly.const(1), QuasiPoly.make(Q(1, 2), Poly.const(1)), 0)


def test_squarefree_checks():
    assert squarefree_and_coprime_checks([x - Q(1, 2)]).ok
    pair = [x ** 2 - Q(6, 5) * x + Q(3, 8), x ** 2 - Q(11, 10) * x + Q(1, 4)]
    assert squarefree_and_coprime_checks(pair, [(0, 1)]).ok
    assert not squarefree_and_coprime_checks([(x - 1) ** 2]).ok


def test_rational_functions():
    f = RationalFn(Poly.const(1), x)
    assert f.deriv() == RationalFn(Poly.const(-1), x ** 2)
    assert RationalFn.log_derivative(x ** 3) == RationalFn(Poly.const(3), x)
    assert f * x == RationalFn(1)


polys = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=7), min_size=1, max_size=5).map(Poly)


@given(polys, polys)
def test_wronskian_antisymmetric(f, g):
    assert wronskian(f, g) == -wronskian(g, f)
    assert wronskian(f, f).is_zero()


@given(polys, polys, polys)
def test_wronskian_leibniz(f, g, h):
    # W(f, g h) = h W(f, g) - f g h'
    lhs = wronskian(f, g * h).as_poly()
    rhs = wronskian(f, g).as_poly() * h - f * g * h.deriv()
    assert lhs == rhs


@given(polys.filter(lambda p: not p.is_zero()), polys)
def test_division_identity(a, b):
    qt, r = b.divmod(a)
    assert qt * a + r == b
    assert r.is_zero() or r.degree < a.degree


@given(polys.filter(lambda p: p.degree >= 1), polys)
def test_solve_wronskian_roundtrip(y, q):
    rhs = wronskian(y, q)
    if rhs.is_zero():
        return
    sol = solve_wronskian(y, rhs, 0)
    assert wronskian(y, sol.raw) == rhs
