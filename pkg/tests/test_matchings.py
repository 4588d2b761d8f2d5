import random
from math import factorial

import pytest
from hypothesis import given, strategies as st

from jacklab.matchings import (
    Matching, all_matchings, count_by_coset_type, count_F, count_F_via_characters, delta_lambda,
    double_factorial_odd, element_name, enumerate_F, epsilon, is_bipartite, lambda_of,
    matching_census,
)
from jacklab.partitions import all_partitions
from jacklab.series import c_value, make_key

matchings_upto4 = st.integers(1, 4).flatmap(lambda n: st.sampled_from(all_matchings(n)))


def test_validation():
    with pytest.raises(ValueError):
        Matching([1, 0, 2])
    with pytest.raises(ValueError):
        Matching([0, 1])
    with pytest.raises(ValueError):
        Matching([1, 2, 0, 3])


def test_encoding():
    m = Matching.from_pairs(2, [(0, 2), (1, 3)])
    assert m.to_json() == [[0, 2], [1, 3]]
    assert str(m) == "{(1,2), (1^,2^)}"
    assert element_name(3) == "2^"
    assert epsilon(2).to_json() == [[0, 1], [2, 3]]


def test_bipartite_examples():
    assert is_bipartite(epsilon(3))
    assert not is_bipartite(Matching.from_pairs(2, [(0, 2), (1, 3)]))
    for n in range(1, 7):
        for lam in all_partitions(n):
            assert is_bipartite(delta_lambda(lam))


def test_lambda_examples():
    assert lambda_of(epsilon(8), delta_lambda((3, 3, 2))) == (3, 3, 2)
    assert lambda_of(epsilon(3), epsilon(3)) == (1, 1, 1)


def test_coset_type_examples():
    assert count_by_coset_type(2, (2,)) == 2
    assert count_by_coset_type(2, (1, 1)) == 1
    with pytest.raises(ValueError):
        count_by_coset_type(3, (2,))


@pytest.mark.parametrize("n", range(1, 5))
def test_coset_type_counts(n):
    eps = epsilon(n)
    for lam in all_partitions(n):
        assert sum(lambda_of(eps, d) == lam for d in all_matchings(n)) == count_by_coset_type(n, lam)


def test_all_matchings_count():
    assert [len(all_matchings(n)) for n in range(1, 6)] == [double_factorial_odd(n) for n in range(1, 6)]
    assert len(set(all_matchings(4))) == 105


def test_enumerate_F_examples():
    out = enumerate_F((2,), [(2,), (2,)])
    assert len(out) == 1 and not is_bipartite(out[0][0])
    assert out[0][0].to_json() == [[0, 2], [1, 3]]
    assert len(enumerate_F((2,), [(1, 1), (2,)])) == 1
    assert len(enumerate_F((1, 1), [(2,), (2,)])) == 2


def test_character_examples():
    assert count_F_via_characters((2,), [(2,), (2,)]) == 1
    assert count_F_via_characters((2,), [(1, 1), (2,)]) == 1
    # brute force finds two admissible delta_0 here, and c(1) agrees
    assert count_F_via_characters((1, 1), [(2,), (2,)]) == 2
    assert c_value(make_key((1, 1), [(2,), (2,)]))(1) == 2


@pytest.mark.parametrize("k,n", [(1, 3), (2, 2), (2, 3)])
def test_census_matches_enumeration(k, n):
    census = matching_census(k, n)
    for (lam, mus), (a, b) in census.items():
        assert len(enumerate_F(lam, mus)) == a
        assert len(enumerate_F(lam, mus, bipartite_only=True)) == b
    assert sum(a for a, _ in census.values()) == len(all_partitions(n)) * double_factorial_odd(n) ** k


def test_census_threads():
    assert matching_census(1, 3, threads=2) == matching_census(1, 3)


def test_count_F():
    assert count_F((2,), [(2,), (2,)]) == 1
    assert count_F((2,), [(2,), (2,)], bipartite_only=True) == 0
    with pytest.raises(ValueError):
        count_F((2,), [(2,)])


@given(matchings_upto4, st.data())
def test_lambda_symmetric(d1, data):
    d2 = data.draw(st.sampled_from(all_matchings(d1.n)))
    assert lambda_of(d1, d2) == lambda_of(d2, d1)
    assert sum(lambda_of(d1, d2)) == d1.n
    assert lambda_of(d1, d1) == (1,) * d1.n


@given(matchings_upto4, st.data())
def test_lambda_relabelling_invariant(d1, data):
    n = d1.n
    d2 = data.draw(st.sampled_from(all_matchings(n)))
    perm = data.draw(st.permutations(range(2 * n)))

    def relabel(d):
        out = [0] * (2 * n)
        for x, y in enumerate(d):
            out[perm[x]] = perm[y]
        return Matching(out)

    assert lambda_of(relabel(d1), relabel(d2)) == lambda_of(d1, d2)


@given(st.integers(1, 5), st.randoms())
def test_random_permutation_coset_type(n, rnd):
    # sigma . eps is a matching whose type against eps has total size n
    perm = list(range(2 * n))
    rnd.shuffle(perm)
    image = [0] * (2 * n)
    for x, y in enumerate(epsilon(n)):
        image[perm[x]] = perm[y]
    assert sum(lambda_of(epsilon(n), Matching(image))) == n
