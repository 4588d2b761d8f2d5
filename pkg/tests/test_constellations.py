import pytest
from hypothesis import given, strategies as st

from jacklab.constellations import (
    LabelledConstellation, brute_force_rooted_census, connected_components, count_rooted_connected,
    dual, euler_characteristic, is_orientable, profile, restrict, rooted_census,
)
from jacklab.matchings import Matching, all_matchings, delta_lambda, enumerate_F, epsilon, is_bipartite
from jacklab.partitions import all_partitions
from jacklab.series import h_value, make_key

D0 = Matching.from_pairs(2, [(0, 2), (1, 3)])


def tuples(k_max=2, n_max=3):
    return st.integers(1, k_max).flatmap(
        lambda k: st.integers(1, n_max).flatmap(
            lambda n: st.lists(st.sampled_from(all_matchings(n)), min_size=k + 2, max_size=k + 2).map(
                lambda ds: LabelledConstellation(k, tuple(ds)))))


def test_profile_examples():
    c = LabelledConstellation(1, (epsilon(2), D0, delta_lambda((2,))))
    assert profile(c).as_tuple() == ((2,), (2,), (2,))
    c = LabelledConstellation(1, (epsilon(2), epsilon(2), delta_lambda((1, 1))))
    assert profile(c).as_tuple() == ((1, 1), (1, 1), (1, 1))


def test_components_examples():
    c = LabelledConstellation(1, (epsilon(2), D0, delta_lambda((2,))))
    assert [len(x) for x in connected_components(c)] == [4]
    c = LabelledConstellation(1, (epsilon(2), epsilon(2), delta_lambda((1, 1))))
    assert len(connected_components(c)) == 2


def test_orientability_examples():
    assert is_orientable(LabelledConstellation(1, (epsilon(2), epsilon(2), delta_lambda((1, 1)))))
    assert not is_orientable(LabelledConstellation(1, (epsilon(2), D0, delta_lambda((2,)))))


def test_validation():
    with pytest.raises(ValueError):
        LabelledConstellation(2, (epsilon(2), epsilon(2), epsilon(2)))
    with pytest.raises(ValueError):
        LabelledConstellation(1, (epsilon(2), epsilon(1), epsilon(2)))
    with pytest.raises(ValueError):
        count_rooted_connected(1, [(2,), (2,)])
    with pytest.raises(ValueError):
        count_rooted_connected(1, [(2,), (2,), (1,)])


def test_rooted_count_examples():
    assert count_rooted_connected(1, [(2,), (2,), (2,)]) == 1
    assert count_rooted_connected(1, [(2,), (2,), (2,)], orientable_filter=True) == 0
    assert count_rooted_connected(1, [(2,), (2,), (2,)], orientable_filter=False) == 1
    assert count_rooted_connected(1, [(1,), (1,), (1,)]) == 1


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (1, 3), (2, 2)])
def test_fixing_first_matching_is_exact(k, n):
    assert rooted_census(k, n) == brute_force_rooted_census(k, n)


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)])
def test_rooted_counts_match_h(k, n):
    census = rooted_census(k, n)
    for key, (total, orient) in census.items():
        h = h_value(make_key(key[0], key[1:]))
        assert h(1) == total and h(0) == orient


@pytest.mark.parametrize("k,n", [(1, 3), (2, 2)])
def test_rooted_count_duality(k, n):
    census = rooted_census(k, n)
    for key, val in census.items():
        lam, mus = key[0], key[1:]
        swapped = (mus[0], lam) + tuple(reversed(mus[1:]))
        assert census[swapped] == val


@given(tuples())
def test_dual_involution(c):
    assert dual(dual(c)) == c
    p, q = profile(c).as_tuple(), profile(dual(c)).as_tuple()
    assert q == (p[1], p[0]) + tuple(reversed(p[2:]))
    assert is_orientable(dual(c)) == is_orientable(c)


@given(tuples(), st.data())
def test_relabelling_invariance(c, data):
    size = 2 * c.n
    perm = data.draw(st.permutations(range(size)))

    def relabel(d):
        out = [0] * size
        for x, y in enumerate(d):
            out[perm[x]] = perm[y]
        return Matching(out)

    r = LabelledConstellation(c.k, tuple(relabel(d) for d in c.deltas))
    assert is_orientable(r) == is_orientable(c)
    assert profile(r) == profile(c)
    assert sorted(map(len, connected_components(r))) == sorted(map(len, connected_components(c)))


@given(tuples())
def test_components_and_euler(c):
    comps = connected_components(c)
    assert sum(len(x) for x in comps) == 2 * c.n
    for comp in comps:
        sub = restrict(c, comp)
        assert euler_characteristic(sub) <= 2
    # each face lies in a single component
    faces = sorted(p for comp in comps for p in profile(restrict(c, comp)).face_type)
    assert faces == sorted(profile(c).face_type)


@given(st.integers(1, 2), st.integers(1, 3), st.data())
def test_all_bipartite_implies_orientable(k, n, data):
    lam = data.draw(st.sampled_from(all_partitions(n)))
    mus = [data.draw(st.sampled_from(all_partitions(n))) for _ in range(k + 1)]
    for tup in enumerate_F(lam, mus):
        c = LabelledConstellation(k, (epsilon(n),) + tup + (delta_lambda(lam),))
        if all(is_bipartite(d) for d in tup):
            assert is_orientable(c)
