from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jacklab.algebra import ALPHA, B, ONE, ZERO, BPoly, BRatFn
from jacklab.partitions import all_partitions, z_aut
from jacklab.series import (
    ProfileKey, ProfileTable, c_table, c_value, check_degree_bounds, coeff_c, coeff_h,
    corollary_bminus1_check, degree_bounds, duality_symmetry_check, h_table, h_value, make_key,
    marginal_c, marginal_h, mult_check, profile_keys, psi_table, somh_check, table_product,
    tau_series, tau_table, topdeg_check,
)


def key(lam, *mus):
    return make_key(lam, mus)


def test_tau_examples():
    t = tau_table(1, 2)
    assert t[key((2,), (2,), (2,))] == BRatFn(B, ALPHA * 2)
    assert t[key((2,), (1, 1), (2,))] == BRatFn(ONE, ALPHA * 2)
    assert tau_table(1, 1)[key((1,), (1,), (1,))] == BRatFn(ONE, ALPHA)


def test_table_product_examples():
    t1 = tau_table(1, 1)
    sq = table_product(t1, t1)
    assert set(sq.entries) == {key((1, 1), (1, 1), (1, 1))}
    zero = ProfileTable(1, 1, {})
    assert table_product(zero, t1).entries == {}
    with pytest.raises(ValueError):
        table_product(t1, tau_table(2, 1))


def test_psi_examples():
    p = psi_table(1, 2)
    assert p[key((2,), (2,), (2,))] == BRatFn.from_poly(B)
    assert p[key((2,), (2,), (1, 1))] == BRatFn.from_poly(ONE)
    assert psi_table(1, 1)[key((1,), (1,), (1,))] == BRatFn.from_poly(ONE)
    with pytest.raises(ValueError):
        psi_table(1, 3, tau=tau_series(1, 2))


def test_coefficient_examples():
    assert coeff_c(1, key((2,), (2,), (2,))).value == B
    assert coeff_c(1, key((2,), (1, 1), (2,))).value == ONE
    assert coeff_c(1, key((1, 1), (2,), (2,))).value == B + 1
    assert coeff_h(1, key((2,), (2,), (2,))).value == B
    assert coeff_h(1, key((2,), (2,), (1, 1))).value == ONE
    rec = coeff_c(1, key((2,), (2,), (2,)))
    assert rec.to_json() == {"lambda": [2], "mus": [[2], [2]], "c": {"coeffs": ["0/1", "1/1"]}}
    with pytest.raises(ValueError):
        coeff_c(2, key((2,), (2,), (2,)))


def test_make_key_validates():
    with pytest.raises(ValueError):
        make_key((2,), [(1,), (2,)])
    with pytest.raises(ValueError):
        make_key((2,), [])


def test_marginal_examples():
    assert marginal_c(1, (2,), (2,), [1]).value == B
    assert marginal_c(1, (2,), (2,), [2]).value == ONE
    assert marginal_h(1, (2,), (2,), [1]).value + marginal_h(1, (2,), (2,), [2]).value == B + 1
    with pytest.raises(ValueError):
        marginal_c(2, (2,), (2,), [1])


def test_degree_bound_examples():
    assert degree_bounds(key((2,), (2,), (2,)))[0] == 1
    assert degree_bounds(key((1,), (1,), (1,)))[0] == 0
    assert degree_bounds(key((2,), (1, 1), (2,)))[1] == 1
    assert all(check_degree_bounds(k) for k in profile_keys(1, 3))


def test_small_identities():
    for k in profile_keys(2, 2):
        assert duality_symmetry_check(2, k)
        assert mult_check(2, k)
    assert duality_symmetry_check(1, key((2, 1), (2, 1), (3,)))


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 3)])
def test_log_and_recurrence_agree(k, n):
    assert psi_table(k, n).entries == psi_table(k, n, method="log").entries


def test_explicit_series_log():
    assert psi_table(1, 3, tau=tau_series(1, 3)).entries == psi_table(1, 3).entries


def test_unknown_method():
    with pytest.raises(ValueError):
        psi_table(1, 2, method="exp")


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (2, 2), (2, 3)])
def test_positivity_small(k, n):
    for table in (c_table(k, n), h_table(k, n)):
        assert all(v.is_nonneg_integral() for v in table.values())


@given(st.integers(1, 4))
def test_c_at_one_sums(n):
    # for k = 1, c(1) counts single matchings delta_0, so summing over every
    # (mu^0, mu^1) at a fixed lam counts all of them
    from jacklab.matchings import double_factorial_odd

    total = sum(v(1) for kk, v in c_table(1, n).items() if kk.lam == (n,))
    assert total == double_factorial_odd(n)


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(profile_keys(1, n)))))
def test_symmetry_in_mus_k1(k):
    swapped = ProfileKey(k.lam, (k.mus[1], k.mus[0]))
    assert c_value(k) == c_value(swapped)


@given(st.integers(1, 3).flatmap(lambda n: st.sampled_from(list(profile_keys(2, n)))))
def test_identities_k2(k):
    assert check_degree_bounds(k)
    assert corollary_bminus1_check(k)
    assert topdeg_check(k)
    assert somh_check(2, k.lam, k.mus[:2])


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(profile_keys(1, n)))))
def test_h_vanishes_when_disconnected_at_top(k):
    h = h_value(k)
    # nonzero h forces the rooted connected Euler relation V - E + F <= 2
    if not h.is_zero():
        assert len(k.lam) + sum(len(m) for m in k.mus) - k.k * k.n <= 2
