"""Perfect matchings of {1, 1^, ..., n, n^} and the sets F / F~ they define.

Encoding: index ``2j`` is the element ``j+1`` and index ``2j+1`` its hatted
twin.  A matching is stored as its pairing array (an involution without fixed
points on ``0..2n-1``).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .partitions import Partition, all_partitions, as_partition, z_aut


class Matching(tuple):
    """Fixed-point-free involution on ``range(2n)``, as a tuple of partners."""

    __slots__ = ()

    def __new__(cls, pairing: Iterable[int]):
        p = tuple(pairing)
        if len(p) % 2:
            raise ValueError("a matching lives on an even number of points")
        for x, y in enumerate(p):
            if not 0 <= y < len(p) or y == x or p[y] != x:
                raise ValueError(f"not a fixed-point-free involution: {p}")
        return super().__new__(cls, p)

    @classmethod
    def _trusted(cls, pairing: Sequence[int]) -> "Matching":
        return super().__new__(cls, tuple(pairing))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "Matching":
        p = [-1] * (2 * n)
        for a, b in pairs:
            p[a], p[b] = b, a
        return cls(p)

    @property
    def n(self) -> int:
        return len(self) // 2

    def pairs(self) -> List[Tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self) if x < y]

    def to_json(self) -> list:
        return [list(pr) for pr in self.pairs()]

    def __str__(self) -> str:
        return "{" + ", ".join(f"({element_name(a)},{element_name(b)})" for a, b in self.pairs()) + "}"


def element_name(idx: int) -> str:
    """Readable label of an index: ``0 -> '1'``, ``1 -> '1^'``."""
    return f"{idx // 2 + 1}" + ("^" if idx % 2 else "")


def unhatted(i: int) -> int:
    """Index of element ``i`` (1-based)."""
    return 2 * (i - 1)


def hatted(i: int) -> int:
    return 2 * (i - 1) + 1


def epsilon(n: int) -> Matching:
    """Pairs every i with its twin i^."""
    return Matching._trusted([x ^ 1 for x in range(2 * n)])


def delta_lambda(lam: Partition) -> Matching:
    """Within each block of ``lam``: (s+1, (s+2)^), ..., (s+l, (s+1)^)."""
    lam = as_partition(lam)
    n = sum(lam)
    p = [0] * (2 * n)
    start = 0
    for part in lam:
        for t in range(part):
            a = unhatted(start + t + 1)
            b = hatted(start + (t + 1) % part + 1)
            p[a], p[b] = b, a
        start += part
    return Matching._trusted(p)


def lambda_of(d1: Sequence[int], d2: Sequence[int]) -> Partition:
    """Half-sizes of the cycles of G(d1, d2), sorted decreasingly."""
    if len(d1) != len(d2):
        raise ValueError("matchings on different ground sets")
    seen = bytearray(len(d1))
    sizes = []
    for x in range(len(d1)):
        if seen[x]:
            continue
        cur, count = x, 0
        while True:
            seen[cur] = 1
            nxt = d1[cur]
            seen[nxt] = 1
            cur = d2[nxt]
            count += 1
            if cur == x:
                break
        sizes.append(count)
    return tuple(sorted(sizes, reverse=True))


def is_bipartite(d: Sequence[int]) -> bool:
    """Every pair joins an unhatted and a hatted element."""
    return all((x ^ y) & 1 for x, y in enumerate(d))


@lru_cache(maxsize=None)
def all_matchings(n: int) -> Tuple[Matching, ...]:
    """All (2n-1)!! matchings, lexicographic in the pairing array."""
    size = 2 * n
    out: List[Matching] = []
    p = [-1] * size

    def rec() -> None:
        try:
            i = p.index(-1)
        except ValueError:
            out.append(Matching._trusted(p))
            return
        for j in range(i + 1, size):
            if p[j] == -1:
                p[i], p[j] = j, i
                rec()
                p[i] = p[j] = -1

    rec()
    return tuple(out)


def double_factorial_odd(n: int) -> int:
    """(2n - 1)!!, the number of matchings of 2n points."""
    out = 1
    for i in range(1, 2 * n, 2):
        out *= i
    return out


def count_by_coset_type(n: int, lam: Partition) -> int:
    """#{delta : Lambda(eps, delta) = lam} = n!/z_lam * 2^(n - len(lam))."""
    lam = as_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{list(lam)} is not a partition of {n}")
    return factorial(n) // z_aut(lam) * 2 ** (n - len(lam))


def _check_key(lam, mus) -> Tuple[Partition, Tuple[Partition, ...], int]:
    lam = as_partition(lam)
    mus = tuple(as_partition(m) for m in mus)
    if len(mus) < 2:
        raise ValueError("need mu^0..mu^k with k >= 1")
    n = sum(lam)
    if any(sum(m) != n for m in mus):
        raise ValueError("all partitions must have the same size")
    return lam, mus, n


def enumerate_F(lam, mus, bipartite_only: bool = False) -> List[Tuple[Matching, ...]]:
    """All (delta_0..delta_{k-1}) with Lambda(eps, delta_0) = mu^0,
    Lambda(delta_{i-1}, delta_i) = mu^i and Lambda(delta_{k-1}, delta_lam) = mu^k.

    With ``bipartite_only`` every delta_i is required to be bipartite.
    """
    lam, mus, n = _check_key(lam, mus)
    k = len(mus) - 1
    pool = [d for d in all_matchings(n) if is_bipartite(d)] if bipartite_only else all_matchings(n)
    eps, dl = epsilon(n), delta_lambda(lam)
    out: List[Tuple[Matching, ...]] = []

    def rec(prefix: List[Matching]) -> None:
        i = len(prefix)
        prev = prefix[-1] if prefix else eps
        for d in pool:
            if lambda_of(prev, d) != mus[i]:
                continue
            if i == k - 1:
                if lambda_of(d, dl) == mus[k]:
                    out.append(tuple(prefix + [d]))
            else:
                rec(prefix + [d])

    rec([])
    return out


# -- census: all |F| and |F~| of a given (k, n) in one sweep ------------------------
@lru_cache(maxsize=None)
def lambda_table(n: int) -> Tuple[Tuple[Partition, ...], ...]:
    """``T[i][j] = Lambda(M_i, M_j)`` over :func:`all_matchings` (symmetric)."""
    mats = all_matchings(n)
    rows = [[None] * len(mats) for _ in mats]
    for i, a in enumerate(mats):
        for j in range(i, len(mats)):
            rows[i][j] = rows[j][i] = lambda_of(a, mats[j])
    return tuple(tuple(r) for r in rows)


def _census_chunk(args) -> Dict[tuple, List[int]]:
    k, n, first = args
    mats = all_matchings(n)
    m = len(mats)
    idx_eps = mats.index(epsilon(n))
    lam_tab = lambda_table(n)
    bip = [is_bipartite(d) for d in mats]
    targets = [(lam, mats.index(delta_lambda(lam))) for lam in all_partitions(n)]
    out: Dict[tuple, List[int]] = {}

    def rec(prev: int, depth: int, acc: tuple, all_bip: bool) -> None:
        if depth == k:
            row = lam_tab[prev]
            for lam, t in targets:
                key = (lam, acc + (row[t],))
                cell = out.get(key)
                if cell is None:
                    cell = out[key] = [0, 0]
                cell[0] += 1
                if all_bip:
                    cell[1] += 1
            return
        row = lam_tab[prev]
        for d in range(m):
            rec(d, depth + 1, acc + (row[d],), all_bip and bip[d])

    rec(first, 1, (lam_tab[idx_eps][first],), bip[first])
    return out


@lru_cache(maxsize=None)
def _census(k: int, n: int, threads: int = 1) -> Dict[tuple, Tuple[int, int]]:
    jobs = [(k, n, first) for first in range(len(all_matchings(n)))]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_census_chunk, jobs))
    else:
        parts = [_census_chunk(j) for j in jobs]
    merged: Dict[tuple, List[int]] = {}
    for part in parts:
        for key, (a, b) in part.items():
            cell = merged.setdefault(key, [0, 0])
            cell[0] += a
            cell[1] += b
    return {key: (a, b) for key, (a, b) in merged.items()}


def matching_census(k: int, n: int, threads: int = 1) -> Dict[tuple, Tuple[int, int]]:
    """``(lam, (mu0..muk)) -> (|F|, |F~|)`` for every profile with |F| > 0."""
    return _census(k, n, threads)


def count_F(lam, mus, bipartite_only: bool = False) -> int:
    lam, mus, n = _check_key(lam, mus)
    a, b = matching_census(len(mus) - 1, n).get((lam, mus), (0, 0))
    return b if bipartite_only else a


# -- Gelfand pair (S_2n, B_n) counting ---------------------------------------------
def hyperoctahedral_order(n: int) -> int:
    return factorial(n) * 2**n


def coset_class_size(lam: Partition) -> int:
    """|K_lam| = |B_n| n!/z_lam 2^(n - len(lam))."""
    n = sum(lam)
    return hyperoctahedral_order(n) * count_by_coset_type(n, lam)


def zonal_character(theta: Partition, mu: Partition) -> Fraction:
    """phi^theta(mu) = |B_n| [p_mu] J_theta at alpha = 2."""
    from .symfunc import jack_table

    coeff = jack_table(sum(theta))[tuple(theta)].get(tuple(mu))
    if coeff is None:
        return Fraction(0)
    return hyperoctahedral_order(sum(theta)) * coeff(1)


def count_F_via_characters(lam, mus) -> int:
    """|F^lam_mus| = 1/(|K_lam| |B_n|^k) sum_nu phi^nu(lam) prod phi^nu(mu^i) / H_2nu."""
    from .partitions import hook_products

    lam, mus, n = _check_key(lam, mus)
    k = len(mus) - 1
    total = Fraction(0)
    for nu in all_partitions(n):
        term = zonal_character(nu, lam)
        for m in mus:
            if not term:
                break
            term *= zonal_character(nu, m)
        total += term / hook_products(nu).H2
    value = total / (coset_class_size(lam) * hyperoctahedral_order(n) ** k)
    if value.denominator != 1:
        raise ArithmeticError(f"character count for {lam}, {mus} is not an integer: {value}")
    return int(value)
