"""Labelled k-constellations as (k+2)-tuples of matchings (delta_-1, ..., delta_k).

Faces are the cycles of G(delta_-1, delta_k) and vertices of color i the cycles
of G(delta_{i-1}, delta_i).  A constellation is orientable when the union
multigraph of all its matchings admits a proper 2-coloring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .matchings import Matching, all_matchings, double_factorial_odd, epsilon, lambda_of, lambda_table
from .partitions import Partition, as_partition


@dataclass(frozen=True)
class Profile:
    face_type: Partition
    vertex_types: Tuple[Partition, ...]

    def as_tuple(self) -> tuple:
        return (self.face_type,) + self.vertex_types


@dataclass(frozen=True)
class LabelledConstellation:
    k: int
    deltas: Tuple[Matching, ...]

    def __post_init__(self):
        if len(self.deltas) != self.k + 2:
            raise ValueError(f"a {self.k}-constellation needs {self.k + 2} matchings")
        if len({len(d) for d in self.deltas}) != 1:
            raise ValueError("matchings on different ground sets")

    @property
    def n(self) -> int:
        return len(self.deltas[0]) // 2

    def to_json(self) -> dict:
        return {"k": self.k, "deltas": [d.to_json() for d in self.deltas]}


def profile(c: LabelledConstellation) -> Profile:
    d = c.deltas
    return Profile(lambda_of(d[0], d[-1]), tuple(lambda_of(d[i], d[i + 1]) for i in range(c.k + 1)))


def _find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def connected_components(c: LabelledConstellation) -> List[frozenset]:
    """Components of G(delta_-1, ..., delta_k), ordered by their smallest index."""
    size = 2 * c.n
    parent = list(range(size))
    for d in c.deltas:
        for x, y in enumerate(d):
            rx, ry = _find(parent, x), _find(parent, y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: Dict[int, set] = {}
    for x in range(size):
        groups.setdefault(_find(parent, x), set()).add(x)
    return [frozenset(g) for _, g in sorted(groups.items())]


def is_orientable(c: LabelledConstellation) -> bool:
    """True iff the union multigraph of all the matchings is 2-colorable."""
    return _two_coloring(c.deltas) is not None


def _two_coloring(deltas: Sequence[Sequence[int]]) -> Optional[List[int]]:
    size = len(deltas[0])
    color = [-1] * size
    for start in range(size):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for d in deltas:
                y = d[x]
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def dual(c: LabelledConstellation) -> LabelledConstellation:
    """(delta_-1, delta_k, delta_{k-1}, ..., delta_0)."""
    return LabelledConstellation(c.k, (c.deltas[0],) + tuple(reversed(c.deltas[1:])))


def restrict(c: LabelledConstellation, component: frozenset) -> LabelledConstellation:
    """The sub-constellation on one connected component, relabelled onto 0..2m-1."""
    order = sorted(component)
    pos = {x: i for i, x in enumerate(order)}
    deltas = tuple(Matching._trusted([pos[d[x]] for x in order]) for d in c.deltas)
    return LabelledConstellation(c.k, deltas)


def euler_characteristic(c: LabelledConstellation) -> int:
    """V - E + F with V = sum len(mu^i), E = k n, F = len(lam)."""
    p = profile(c)
    return sum(len(m) for m in p.vertex_types) - c.k * c.n + len(p.face_type)


# -- rooted counts ------------------------------------------------------------------
@lru_cache(maxsize=None)
def _rooted_census(k: int, n: int) -> Dict[tuple, Tuple[int, int]]:
    """profile -> (#connected, #connected orientable) labelled tuples with delta_-1 = eps.

    Every matching can be carried to eps by relabelling the 2n points, and
    profile, connectivity and orientability are relabelling invariants, so the
    full count is this one times (2n-1)!!.
    """
    mats = all_matchings(n)
    table = lambda_table(n)
    eps_idx = mats.index(epsilon(n))
    out: Dict[tuple, List[int]] = {}
    for combo in itertools.product(range(len(mats)), repeat=k + 1):
        chain = (eps_idx,) + combo
        deltas = [mats[i] for i in chain]
        if not _is_connected(deltas):
            continue
        key = (table[eps_idx][combo[-1]],) + tuple(table[chain[i]][chain[i + 1]] for i in range(k + 1))
        cell = out.setdefault(key, [0, 0])
        cell[0] += 1
        if _two_coloring(deltas) is not None:
            cell[1] += 1
    return {key: (a, b) for key, (a, b) in out.items()}


def _is_connected(deltas: Sequence[Sequence[int]]) -> bool:
    size = len(deltas[0])
    seen = bytearray(size)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for d in deltas:
            y = d[x]
            if not seen[y]:
                seen[y] = 1
                count += 1
                stack.append(y)
    return count == size


def _quotient(labelled: int, n: int) -> int:
    q = Fraction(labelled, factorial(2 * n - 1))
    if q.denominator != 1:
        raise ArithmeticError(f"rooted count {q} is not an integer")
    return int(q)


def count_rooted_connected(k: int, prof: Sequence[Sequence[int]], orientable_filter: Optional[bool] = None) -> int:
    """Rooted connected k-constellations with the given profile (lam, mu0..muk).

    ``orientable_filter=True`` keeps orientable ones only, ``False`` keeps the
    non-orientable ones, ``None`` counts all of them.
    """
    key = tuple(as_partition(p) for p in prof)
    if len(key) != k + 2:
        raise ValueError(f"a profile of a {k}-constellation has {k + 2} partitions")
    n = sum(key[0])
    if any(sum(p) != n for p in key):
        raise ValueError("all partitions of a profile must have the same size")
    total, orient = _rooted_census(k, n).get(key, (0, 0))
    chosen = {None: total, True: orient, False: total - orient}[orientable_filter]
    return _quotient(chosen * double_factorial_odd(n), n)


def rooted_census(k: int, n: int) -> Dict[tuple, Tuple[int, int]]:
    """profile -> (all rooted connected, orientable rooted connected) counts."""
    return {key: (_quotient(a * double_factorial_odd(n), n), _quotient(b * double_factorial_odd(n), n))
            for key, (a, b) in _rooted_census(k, n).items()}


def brute_force_rooted_census(k: int, n: int) -> Dict[tuple, Tuple[int, int]]:
    """Same as :func:`rooted_census` but over all (k+2)-tuples, delta_-1 included."""
    mats = all_matchings(n)
    table = lambda_table(n)
    out: Dict[tuple, List[int]] = {}
    for chain in itertools.product(range(len(mats)), repeat=k + 2):
        deltas = [mats[i] for i in chain]
        if not _is_connected(deltas):
            continue
        key = (table[chain[0]][chain[-1]],) + tuple(table[chain[i]][chain[i + 1]] for i in range(k + 1))
        cell = out.setdefault(key, [0, 0])
        cell[0] += 1
        if _two_coloring(deltas) is not None:
            cell[1] += 1
    return {key: (_quotient(a, n), _quotient(b, n)) for key, (a, b) in out.items()}
