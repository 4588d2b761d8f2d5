from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jacklab.algebra import (
    ALPHA, B, ONE, ZERO, BPoly, BRatFn, InvalidCoefficientError, NotPolynomialError,
    alpha_shift, alpha_unshift, bigrat_to_str, poly_gcd,
)

small = st.integers(-20, 20)
polys = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=5).map(BPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_eval_examples():
    assert ((1 + B) ** 2)(1) == 4
    assert B(0) == 0
    assert (B * B + B)(-1) == 0


def test_ratfn_normalisation_examples():
    assert BRatFn(B * B - 1, B - 1) == BRatFn.from_poly(B + 1)
    r = BRatFn(B * 2, BPoly([2]))
    assert r.as_poly() == B
    z = BRatFn(ZERO, B + 1)
    assert z.is_zero() and z.den == ONE


def test_alpha_examples():
    assert ALPHA == BPoly([1, 1])
    assert ALPHA ** 2 == BPoly([1, 2, 1])
    assert alpha_shift(BPoly([0, 1])) == ALPHA
    assert alpha_unshift(ALPHA) == BPoly([0, 1])


def test_zero_denominator_rejected():
    with pytest.raises(InvalidCoefficientError):
        BRatFn(ONE, ZERO)


def test_exact_div():
    assert (B * B - 1).exact_div(B + 1) == B - 1
    with pytest.raises(NotPolynomialError):
        (B * B + 1).exact_div(B + 1)


def test_json_roundtrip():
    p = BPoly([Fraction(1, 2), 0, -3])
    assert p.to_json() == ["1/2", "0/1", "-3/1"]
    assert BPoly.from_json(p.to_json()) == p
    r = BRatFn(p, B + 2)
    assert BRatFn.from_json(r.to_json()) == r
    assert bigrat_to_str(Fraction(-4, 6)) == "-2/3"


def test_degree_of_zero():
    assert ZERO.degree == -1 and ZERO.is_nonneg_integral()
    assert not BPoly([1, -1]).is_nonneg_integral()
    assert not BPoly([Fraction(1, 2)]).is_nonneg_integral()


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(polys, polys, st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(polys, nonzero_polys)
def test_division_with_remainder(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides(p, q, g):
    d = poly_gcd(p * g, q * g)
    assert (p * g).exact_div(d) * d == p * g
    assert (g % d).is_zero() or d.degree >= g.degree


@given(polys, nonzero_polys, polys, nonzero_polys)
def test_ratfn_field_ops(a, b, c, d):
    x, y = BRatFn(a, b), BRatFn(c, d)
    assert (x + y) - y == x
    if not y.is_zero():
        assert (x * y) / y == x
    assert x.den.leading == 1


@given(polys)
def test_alpha_shift_roundtrip(p):
    assert alpha_unshift(alpha_shift(p)) == p
    assert alpha_shift(p)(0) == p(1)
