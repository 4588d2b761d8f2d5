from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jacklab.algebra import ALPHA, B, ONE, ZERO, BPoly
from jacklab.lassalle import (
    QRPoly, jack_rect_via_tau, lassalle_rect_report, padding_check, padding_sides, theta, theta_rect,
    theta_rect_poly,
)
from jacklab.partitions import all_partitions, multiplicity, rectangular, z_aut
from jacklab.symfunc import extract_p_coeff, jack

no_ones = [mu for m in range(2, 6) for mu in all_partitions(m) if not multiplicity(mu, 1)]


def test_theta_examples():
    assert theta((2,), (2,)).value == B + 1
    assert theta((3,), (2,)).value.is_zero()
    assert theta((2,), (2, 1)).value == extract_p_coeff(jack((2, 1)), (2, 1)).as_poly()
    rec = theta((2,), (2,))
    assert rec.to_json() == {"mu": [2], "lambda": [2], "theta": {"coeffs": ["1/1", "1/1"]}}


def test_padding_binomial():
    # mu = [2, 1] has one part equal to 1; padding to size 4 adds one more
    value = theta((2, 1), (2, 2)).value
    assert value == extract_p_coeff(jack((2, 2)), (2, 1, 1)).as_poly() * 2


@pytest.mark.parametrize("q,r", [(1, 2), (2, 1), (2, 2), (1, 3), (3, 2), (2, 4)])
def test_jack_rect_via_tau(q, r):
    assert jack_rect_via_tau(q, r) == jack(rectangular(q, r))


def test_theta_rect_poly_examples():
    poly = theta_rect_poly((2,))
    assert poly(1, 2) == (B + 1) * 2
    report = lassalle_rect_report((2,))
    assert report["ok"] and report["nonnegative_integral"] and report["normalisation"]
    # q s (alpha s + q + b) with s = -r
    expected = QRPoly({(1, 2): ALPHA, (2, 1): ONE, (1, 1): B})
    assert poly.in_minus_r().coeffs == expected.coeffs


def test_theta_rect_needs_no_ones():
    with pytest.raises(ValueError):
        theta_rect((2, 1), 2, 2)
    with pytest.raises(ValueError):
        theta_rect_poly((1, 1))
    assert theta_rect((3,), 1, 2).is_zero()


@pytest.mark.parametrize("mu,q,r", [((2,), 1, 2), ((2,), 2, 2), ((3,), 2, 2), ((2, 2), 2, 2), ((4,), 2, 3)])
def test_padding_examples(mu, q, r):
    assert padding_check(mu, q, r)
    lhs, rhs = padding_sides(mu, q, r)
    assert lhs == rhs


@pytest.mark.parametrize("mu", no_ones[:5])
def test_lassalle_small(mu):
    assert lassalle_rect_report(mu)["ok"]


def test_qrpoly_json():
    p = QRPoly({(1, 0): B, (0, 0): ZERO})
    assert p.to_json() == [{"q": 1, "r": 0, "poly_b": ["0/1", "1/1"]}]
    assert p.degree_q() == 1 and p.degree_r() == 0


@given(st.sampled_from(no_ones[:4]), st.integers(1, 4), st.integers(1, 4))
def test_rect_poly_matches_direct_jacks(mu, q, r):
    if q * r > 8:
        return
    direct = theta(mu, rectangular(q, r)).value * z_aut(mu)
    assert theta_rect_poly(mu)(q, r) == direct


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(all_partitions(n))))
def test_theta_of_ones_is_one(lam):
    assert theta((1,) * sum(lam), lam).value == ONE


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.sampled_from(all_partitions(n)), st.sampled_from(all_partitions(n)))))
def test_z_theta_integral(pair):
    mu, lam = pair
    assert (theta(mu, lam).value * z_aut(mu)).has_integer_coeffs()
