import random
from fractions import Fraction as Q

import pytest

from gaudin.closedform import LengthLabel, admissible_lengths, solve_closed_form
from gaudin.polyalg import NoSolution, Poly
from gaudin.reproduction import (ChainBlocked, descent_chain, descent_word, rebuild_from_trivial, reproduce,
                                 solve_by_elimination)
from gaudin.rootsys import parse_datum

x = Poly.x()
ONE = Poly.const(1)


def test_first_step_from_bottom(B2):
    step = reproduce(B2, (-5, 1), (ONE, ONE), 1)
    assert step.tuple_out == (x - Q(3, 4), ONE)
    assert step.weight_out == (3, -7)  # (lam_1 + lam_2 + 1, -2 lam_1 - lam_2 - 4)


def test_u1_general(B2):
    for l1, l2 in [(1, 1), (2, 3), (5, 0)]:
        step = reproduce(B2, (-l1 - l2 - 3, l2), (ONE, ONE), 1)
        assert step.tuple_out[0] == x - Q(l1 + l2 + 1, l1 + l2 + 2)


def test_double_reproduction_returns(B2):
    y = solve_closed_form(B2, (2, 1), "4")
    once = reproduce(B2, (2, 1), tuple(y), 1)
    twice = reproduce(B2, once.weight_out, once.tuple_out, 1)
    assert twice.weight_out == (2, 1)
    assert twice.tuple_out == tuple(y)


def test_descent_words(B2, B3):
    assert descent_word(B2, LengthLabel(4)) == (1, 2, 1)
    assert descent_word(B2, LengthLabel(0)) == ()
    assert descent_word(B3, LengthLabel(5)) == (2, 3, 2, 1)
    assert descent_word(B3, LengthLabel(3)) is None
    assert descent_chain(B2, (1, 1), "4") == (1, 2, 1)


def test_chain_blocked_when_inadmissible(B2):
    with pytest.raises(ChainBlocked):
        descent_chain(B2, (0, 2), "4")


def test_lambda1_zero_step_fails(B2):
    # from a length-3 tuple at lambda = (0, 2) the step up in direction 1 cannot give a generic pair
    y3 = solve_closed_form(B2, (0, 2), "3")
    s1 = (-2, 2)  # s_1 . (0, 2)
    try:
        step = reproduce(B2, s1, tuple(y3), 1)
    except NoSolution:
        return
    assert not step.generic.ok


def test_rebuild_examples(B2):
    assert tuple(rebuild_from_trivial(B2, (1, 1), "4")) == tuple(solve_closed_form(B2, (1, 1), "4"))
    C3 = parse_datum("C", 3)
    assert tuple(rebuild_from_trivial(C3, (1, 1, 1), "5")) == tuple(solve_closed_form(C3, (1, 1, 1), "5"))
    assert all(p == ONE for p in rebuild_from_trivial(B2, (3, 2), "0"))


def test_elimination_for_b_length_r():
    for r, lam in [(2, (1, 1)), (3, (1, 2, 1)), (3, (0, 0, 2))]:
        d = parse_datum("B", r)
        assert tuple(solve_by_elimination(d, lam, str(r))) == tuple(solve_closed_form(d, lam, str(r)))


@pytest.mark.parametrize("fam,r", [("B", 3), ("C", 3), ("C", 4), ("D", 4), ("D", 5)])
def test_path_agreement_sample(fam, r):
    d = parse_datum(fam, r)
    rng = random.Random(11)
    for _ in range(4):
        lam = tuple(rng.randint(0, 3) for _ in range(r))
        for lb in admissible_lengths(d, lam):
            assert tuple(rebuild_from_trivial(d, lam, lb)) == tuple(solve_closed_form(d, lam, lb))
