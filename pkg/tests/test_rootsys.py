from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from gaudin.rootsys import (RootSystemError, add, bilinear, casimir_value, parse_datum, positive_root_count,
                            shifted_reflect, shifted_word, sub, weyl_dim)

DATA = [("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4), ("D", 5)]


def test_b2_bilinear_values(B2):
    a1, w1, w2 = B2.simple_root(1), B2.fundamental(1), B2.fundamental(2)
    assert bilinear(B2, a1, a1) == 4
    assert bilinear(B2, w1, w1) == 2
    assert bilinear(B2, w1, w2) == 1
    assert bilinear(B2, w2, w2) == 1


def test_cartan_conventions():
    assert parse_datum("B", 3).cartan[2][1] == -2  # <alpha_2, alpha_3^vee>
    assert parse_datum("C", 3).cartan[1][2] == -2
    assert parse_datum("B", 3).symmetrizers == (2, 2, 1)
    assert parse_datum("C", 3).symmetrizers == (1, 1, 2)


@pytest.mark.parametrize("fam,r", DATA)
def test_rho_pairs_to_half_norm(fam, r):
    d = parse_datum(fam, r)
    for i in range(1, r + 1):
        a = d.simple_root(i)
        assert bilinear(d, d.rho, a) == bilinear(d, a, a) / 2


def test_shifted_reflect_examples(B2):
    # s_1 . lam = (-lam_1 - 2, 2 lam_1 + lam_2 + 2) in B2
    assert shifted_reflect(B2, 1, (1, 1)) == (-3, 5)
    lam = (Q(1), Q(1))
    a1 = B2.simple_root(1)
    assert shifted_reflect(B2, 1, lam) == sub(lam, tuple((lam[0] + 1) * c for c in a1))


def test_shifted_reflect_b_r_minus_one():
    d = parse_datum("B", 4)
    lam = (Q(1), Q(2), Q(3), Q(4))
    l1, l2, l3, l4 = lam
    assert shifted_reflect(d, 3, lam) == (l1, l2 + l3 + 1, -l3 - 2, 2 * l3 + l4 + 2)


def test_shifted_word_b2():
    d = parse_datum("B", 2)
    for l1, l2 in [(1, 1), (3, 0), (0, 5)]:
        assert shifted_word(d, (1, 2, 1), (l1, l2)) == (-l1 - l2 - 3, l2)
    assert shifted_word(d, (), (2, 7)) == (2, 7)


def test_shifted_word_b3_first_coordinate():
    d = parse_datum("B", 3)
    th = (Q(2), Q(1), Q(3))
    out = shifted_word(d, (1, 2, 3, 2, 1), th)
    assert out[0] == -th[0] - 2 * th[1] - th[2] - 2 * 3 + 1


def test_weyl_dim_values(B2):
    assert weyl_dim(B2, (1, 0)) == 5
    assert weyl_dim(B2, (1, 1)) == 16
    assert weyl_dim(B2, (2, 1)) == 40
    assert weyl_dim(parse_datum("C", 3), (1, 0, 0)) == 6
    assert weyl_dim(parse_datum("D", 4), (0, 0, 1, 0)) == 8


def test_positive_root_counts():
    assert [positive_root_count(parse_datum(f, r)) for f, r in DATA] == [4, 9, 16, 9, 16, 12, 20]


def test_casimir_b2():
    assert casimir_value(parse_datum("B", 2), (2, 0)) == 20
    assert casimir_value(parse_datum("B", 2), (1, 0)) == 8


def test_bad_data():
    with pytest.raises(RootSystemError):
        parse_datum("E", 6)
    with pytest.raises(RootSystemError):
        parse_datum("D", 3)
    with pytest.raises(RootSystemError):
        parse_datum("B", 2).simple_root(3)


weights = st.lists(st.integers(-6, 6), min_size=4, max_size=4).map(lambda v: tuple(Q(x) for x in v))


@given(weights, st.integers(1, 4), st.sampled_from(["B", "C", "D"]))
def test_shifted_reflect_is_involution(lam, i, fam):
    d = parse_datum(fam, 4)
    assert shifted_reflect(d, i, shifted_reflect(d, i, lam)) == lam


@given(weights, weights, st.sampled_from(["B", "C", "D"]))
def test_bilinear_symmetric_and_additive(u, v, fam):
    d = parse_datum(fam, 4)
    assert bilinear(d, u, v) == bilinear(d, v, u)
    assert bilinear(d, add(u, v), v) == bilinear(d, u, v) + bilinear(d, v, v)
    assert bilinear(d, sub(u, v), u) == bilinear(d, u, u) - bilinear(d, v, u)


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.sampled_from(["B", "C"]))
def test_weyl_dim_positive_integer(lam, fam):
    d = parse_datum(fam, 3)
    n = weyl_dim(d, lam)
    assert isinstance(n, int) and n >= 1
