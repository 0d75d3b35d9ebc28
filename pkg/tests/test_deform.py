from fractions import Fraction as Q

import mpmath
import pytest
from hypothesis import given, strategies as st

from gaudin.closedform import admissible_lengths, closed_form_data, decompose
from gaudin.deform import (DeformConfig, RescaledSystem, enumerate_chains, generic_completeness_report,
                           newton_uniqueness, seed_and_track)
from gaudin.rootsys import parse_datum, weyl_dim


def test_chain_counts(B2):
    assert len(enumerate_chains(B2, (1, 0), 1)) == 3
    assert len(enumerate_chains(B2, (1, 0), 0)) == 1
    chains = enumerate_chains(B2, (0, 0), 2)
    assert chains and all(c.weights[1] == (1, 0) for c in chains)


def test_chain_count_matches_dimensions(B2):
    # sum over chains of dim V_{mu_N} = dim V_lam * 5^N
    for lam, N in [((1, 0), 2), ((0, 1), 2), ((2, 0), 1)]:
        total = sum(weyl_dim(B2, c.weights[-1]) for c in enumerate_chains(B2, lam, N))
        assert total == weyl_dim(B2, lam) * 5 ** N


def test_config_validation():
    with pytest.raises(ValueError):
        DeformConfig(z_tilde=(1, 1)).validate(2)
    with pytest.raises(ValueError):
        DeformConfig(z_tilde=(0, 2)).validate(2)
    with pytest.raises(ValueError):
        DeformConfig(eps_start=Q(1, 2), eps_stop=Q(1, 10)).validate(1)
    sch = DeformConfig().schedule()
    assert sch[0] == Q(1, 10 ** 4) and sch[-1] == Q(1, 10) and Q(1, 1000) in sch


def test_one_point_tracking_is_the_closed_form(B2):
    for ch in enumerate_chains(B2, (2, 1), 1):
        tr = seed_and_track(ch, DeformConfig(z_tilde=(Q(3, 2),)))
        with mpmath.workprec(128):
            for got, want in zip(tr.final, tr.seed):
                assert abs(got - want) < 1e-12
        assert tr.quadratic


def test_rescaled_roots_approach_two_point_roots(B2):
    cfg = DeformConfig(z_tilde=(1, 2))
    for ch in enumerate_chains(B2, (1, 0), 2):
        tr = seed_and_track(ch, cfg)
        tt = tr.tt[tr.eps.index(Q(1, 1000))]
        for got, want in zip(tt, tr.seed):
            assert abs(got - want) <= 0.05 * abs(want)


@given(st.integers(0, 2), st.fractions(min_value=Q(1, 1000), max_value=Q(1, 10)))
def test_jacobian_matches_finite_differences(idx, eps):
    d = parse_datum("B", 2)
    chain = [c for c in enumerate_chains(d, (1, 0), 2) if sum(map(sum, c.lvecs)) > 0][idx % 2]
    with mpmath.workprec(128):
        sys_ = RescaledSystem(chain, (1, -2))
        e = mpmath.mpf(eps.numerator) / eps.denominator
        x = [v * (1 + mpmath.mpf("0.01") * (i + 1)) for i, v in enumerate(sys_.seed())]
        J = sys_.jacobian(x, e)
        h = mpmath.mpf("1e-13")  # central differences: error ~ h^2 + 2^-128 / h
        for u in range(len(x)):
            xp, xm = list(x), list(x)
            xp[u] += h
            xm[u] -= h
            fd = [(a - b) / (2 * h) for a, b in zip(sys_.residual(xp, e), sys_.residual(xm, e))]
            for v in range(len(x)):
                assert abs(fd[v] - J[v, u]) <= 1e-18 * (1 + abs(J[v, u]))


def test_generic_report_single_vector(B2):
    rep = generic_completeness_report(B2, (0, 0), 1)
    assert rep.chain_count == rep.gram_rank == rep.sing_dim == 1
    assert rep.ok()


def test_generic_report_b2_two_points(B2):
    rep = generic_completeness_report(B2, (1, 0), 2, at_eps=Q(1, 1000))
    assert rep.gram_rank == rep.chain_count == rep.sing_dim == 7
    assert rep.singular_ok and rep.eigen_ok
    assert all(e <= 0.01 for row in rep.scaled_errors for e in row)
    rep2 = generic_completeness_report(B2, (1, 0), 2, at_eps=Q(1, 100))
    assert rep2.min_gap > mpmath.mpf("1e-6")


def test_uniqueness_b3_linear_roots(B3):
    rep = newton_uniqueness(B3, (3, 1, 2), "2", starts=50)
    assert rep.ok and rep.matched > 0
    sol = closed_form_data(B3, (3, 1, 2), "2")
    assert (sol.linear[1], sol.linear[2]) == (Q(5, 6), Q(5, 12))


def test_uniqueness_b2_all_labels(B2):
    for lam in [(1, 1), (2, 0), (0, 2)]:
        for lb in admissible_lengths(B2, lam):
            rep = newton_uniqueness(B2, lam, lb, starts=60)
            assert rep.ok and rep.matched > 0


def test_uniqueness_length_zero(B2):
    rep = newton_uniqueness(B2, (1, 1), "0", starts=5)
    assert rep.ok and rep.unmatched == []
