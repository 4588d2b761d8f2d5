"""Truncated (k+2)-alphabet Jack series tau and Psi, and their coefficients.

The alphabets are never materialised: the degree-n slice of a series is a
table keyed by ``ProfileKey(lam, (mu0, ..., muk))``, the index of the monomial
``p_lam q0_mu0 ... qk_muk``.

Internally every table is stored *scaled*: the entry at ``key`` is multiplied
by ``(1 + b)^len(lam)``.  Since lengths add under partition union, the scaled
tables are closed under :func:`table_product`, and all the scaled tables that
arise (``c / z_lam`` for tau, ``(1 + b)^len(lam) h`` for Psi) are polynomials,
so the hot loops never touch rational functions.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import ALPHA, ONE, ZERO, BPoly, BRatFn, NotPolynomialError, poly_gcd
from .partitions import Partition, all_partitions, as_partition, difference, sub_partitions, z_aut
from .symfunc import jack_norm, jack_table


class ProfileKey(NamedTuple):
    lam: Partition
    mus: Tuple[Partition, ...]

    @property
    def n(self) -> int:
        return sum(self.lam)

    @property
    def k(self) -> int:
        return len(self.mus) - 1

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mus": [list(m) for m in self.mus]}


def make_key(lam: Sequence[int], mus: Iterable[Sequence[int]]) -> ProfileKey:
    """Validated key: every partition must have the same size."""
    lam = as_partition(lam)
    mus = tuple(as_partition(m) for m in mus)
    if not mus:
        raise ValueError("at least one mu partition is required")
    n = sum(lam)
    bad = [list(m) for m in mus if sum(m) != n]
    if bad:
        raise ValueError(f"partitions {bad} are not of size |lambda| = {n}")
    return ProfileKey(lam, mus)


def profile_keys(k: int, n: int) -> Iterator[ProfileKey]:
    """All keys of degree ``n`` for ``k + 1`` mu-partitions, in canonical order."""
    parts = all_partitions(n)
    for lam in parts:
        for mus in itertools.product(parts, repeat=k + 1):
            yield ProfileKey(lam, mus)


@dataclass
class ProfileTable:
    """Degree-``n`` slice of a series in ``k + 2`` alphabets; absent keys are zero."""

    n: int
    k: int
    entries: Dict[ProfileKey, BRatFn] = field(default_factory=dict)

    def __getitem__(self, key: ProfileKey) -> BRatFn:
        return self.entries.get(key, BRatFn.from_poly(ZERO))

    def items(self) -> List[Tuple[ProfileKey, BRatFn]]:
        return sorted(self.entries.items(), key=lambda kv: _key_rank(kv[0]))

    def to_json(self) -> list:
        return [dict(key.to_json(), value=val.to_json()) for key, val in self.items()]


@dataclass
class SeriesTrunc:
    """tau (or Psi) truncated at degree N; ``tables[n - 1]`` is the degree-n slice."""

    k: int
    N: int
    tables: List[ProfileTable]

    def __post_init__(self):
        if any(t.k != self.k for t in self.tables):
            raise ValueError("inconsistent color count across tables")

    def slice(self, n: int) -> ProfileTable:
        if not 1 <= n <= self.N:
            raise ValueError(f"degree {n} outside truncation 1..{self.N}")
        return self.tables[n - 1]


@dataclass(frozen=True)
class CoeffRecord:
    key: ProfileKey
    value: BPoly
    kind: str = "c"

    def to_json(self) -> dict:
        out = self.key.to_json()
        out[self.kind] = {"coeffs": self.value.to_json()}
        return out


def _key_rank(key: ProfileKey) -> tuple:
    n = key.n
    rank = {p: i for i, p in enumerate(all_partitions(n))}
    return (n, len(key.mus), rank[key.lam]) + tuple(rank[m] for m in key.mus)


# -- scaled tables (internal) ---------------------------------------------------
Scaled = Dict[ProfileKey, BPoly]

_TAU: Dict[Tuple[int, int], Scaled] = {}
_PSI: Dict[Tuple[int, int], Scaled] = {}
_H: Dict[Tuple[int, int], Dict[ProfileKey, BPoly]] = {}


def clear_caches() -> None:
    _TAU.clear()
    _PSI.clear()
    _H.clear()


def _union(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def _poly_lcm(a: BPoly, b: BPoly) -> BPoly:
    return a * b.exact_div(poly_gcd(a, b))


def _scaled_tau(k: int, n: int) -> Scaled:
    """(1+b)^len(lam) * [p_lam q_mu...] tau at degree n, i.e. c / z_lam."""
    if (k, n) in _TAU:
        return _TAU[(k, n)]
    parts = all_partitions(n)
    jacks = jack_table(n)
    norms = {th: jack_norm(th) for th in parts}
    lcm = ONE
    for th in parts:
        lcm = _poly_lcm(lcm, norms[th])
    weights = [(lcm.exact_div(norms[th]), jacks[th]) for th in parts]
    # partial products over the theta sum, extended one partition at a time
    level: Dict[tuple, List[BPoly]] = {(): [w for w, _ in weights]}
    for _ in range(k + 2):
        nxt: Dict[tuple, List[BPoly]] = {}
        for prefix, vals in level.items():
            for rho in parts:
                nxt[prefix + (rho,)] = [v * jt.get(rho, ZERO) for v, (_, jt) in zip(vals, weights)]
        level = nxt
    out: Scaled = {}
    for idx, vals in level.items():
        key = ProfileKey(idx[0], idx[1:])
        total = sum(vals, ZERO)
        if total.is_zero():
            continue
        try:
            out[key] = (total * ALPHA ** len(key.lam)).exact_div(lcm)
        except NotPolynomialError as exc:
            raise NotPolynomialError(f"c at {key} is not a polynomial in b") from exc
    _TAU[(k, n)] = out
    return out


def _scaled_product(A: Scaled, B: Scaled) -> Scaled:
    out: Scaled = {}
    for ka, va in A.items():
        for kb, vb in B.items():
            key = ProfileKey(_union(ka.lam, kb.lam), tuple(_union(x, y) for x, y in zip(ka.mus, kb.mus)))
            prev = out.get(key)
            term = va * vb
            out[key] = term if prev is None else prev + term
    return {key: v for key, v in out.items() if not v.is_zero()}


def _scaled_psi(k: int, n: int) -> Scaled:
    """(1+b)^len(lam) * [p_lam q_mu...] Psi at degree n.

    From t d/dt tau = tau * Psi / (1 + b):
    Psi_n = (1 + b) n tau_n - sum_{j<n} Psi_j * tau_{n-j}.
    """
    if (k, n) in _PSI:
        return _PSI[(k, n)]
    acc: Scaled = {key: v * ALPHA * n for key, v in _scaled_tau(k, n).items()}
    for j in range(1, n):
        for key, v in _scaled_product(_scaled_psi(k, j), _scaled_tau(k, n - j)).items():
            acc[key] = acc.get(key, ZERO) - v
    out = {key: v for key, v in acc.items() if not v.is_zero()}
    _PSI[(k, n)] = out
    return out


def _scaled_log_psi(k: int, n: int) -> Scaled:
    """Same slice as :func:`_scaled_psi`, via log(tau) = sum (-1)^(m+1) (tau-1)^m / m."""
    tau = {d: _scaled_tau(k, d) for d in range(1, n + 1)}
    # powers[d] = degree-d slice of (tau - 1)^m, updated in place for m = 1, 2, ...
    powers = dict(tau)
    log_n: Scaled = dict(powers.get(n, {}))
    for m in range(2, n + 1):
        nxt: Dict[int, Scaled] = {}
        for d in range(m, n + 1):
            slice_d: Scaled = {}
            for j in range(m - 1, d):
                if j in powers:
                    for key, v in _scaled_product(powers[j], tau[d - j]).items():
                        slice_d[key] = slice_d.get(key, ZERO) + v
            nxt[d] = slice_d
        powers = nxt
        sign = Fraction(1 if m % 2 else -1, m)
        for key, v in powers.get(n, {}).items():
            log_n[key] = log_n.get(key, ZERO) + v * sign
    return {key: v * ALPHA * n for key, v in log_n.items() if not v.is_zero()}


def _unscale(table: Scaled, k: int, n: int) -> ProfileTable:
    entries = {key: BRatFn(v, ALPHA ** len(key.lam)) for key, v in table.items()}
    return ProfileTable(n, k, entries)


def _h_poly(k: int, n: int) -> Dict[ProfileKey, BPoly]:
    if (k, n) not in _H:
        out = {}
        for key, v in _scaled_psi(k, n).items():
            try:
                out[key] = v.exact_div(ALPHA ** len(key.lam))
            except NotPolynomialError as exc:
                raise NotPolynomialError(f"h at {key} is not a polynomial in b") from exc
        _H[(k, n)] = out
    return _H[(k, n)]


# -- public series API ----------------------------------------------------------
def tau_table(k: int, n: int) -> ProfileTable:
    """[t^n] tau: entry sum over theta of [p_lam]J_theta prod [p_mu^i]J_theta / j_theta."""
    return _unscale(_scaled_tau(k, n), k, n)


def tau_series(k: int, N: int) -> SeriesTrunc:
    return SeriesTrunc(k, N, [tau_table(k, n) for n in range(1, N + 1)])


def table_product(A: ProfileTable, B: ProfileTable) -> ProfileTable:
    """Product of two homogeneous slices; keys merge by componentwise partition union."""
    if A.k != B.k:
        raise ValueError(f"color count mismatch: {A.k} vs {B.k}")
    out: Dict[ProfileKey, BRatFn] = {}
    for ka, va in A.entries.items():
        for kb, vb in B.entries.items():
            key = ProfileKey(_union(ka.lam, kb.lam), tuple(_union(x, y) for x, y in zip(ka.mus, kb.mus)))
            out[key] = out.get(key, BRatFn.from_poly(ZERO)) + va * vb
    return ProfileTable(A.n + B.n, A.k, {key: v for key, v in out.items() if not v.is_zero()})


def psi_table(k: int, n: int, tau: Optional[SeriesTrunc] = None, method: str = "recurrence") -> ProfileTable:
    """[t^n] Psi = (1 + b) n [t^n] log tau.

    ``method="recurrence"`` uses the derivative recurrence on cached scaled
    tables; ``method="log"`` expands the logarithm series explicitly, either on
    the supplied truncation ``tau`` (BRatFn arithmetic) or on cached tables.
    """
    if tau is not None:
        if tau.N < n:
            raise ValueError(f"tau truncated at degree {tau.N} < {n}")
        return _psi_from_series(tau, n)
    if method == "recurrence":
        return _unscale(_scaled_psi(k, n), k, n)
    if method == "log":
        return _unscale(_scaled_log_psi(k, n), k, n)
    raise ValueError(f"unknown method {method!r}")


def _psi_from_series(tau: SeriesTrunc, n: int) -> ProfileTable:
    k = tau.k
    powers = {d: tau.slice(d) for d in range(1, n + 1)}
    log_n = dict(powers[n].entries)
    for m in range(2, n + 1):
        nxt = {}
        for d in range(m, n + 1):
            acc: Dict[ProfileKey, BRatFn] = {}
            for j in range(m - 1, d):
                if j in powers:
                    for key, v in table_product(powers[j], tau.slice(d - j)).entries.items():
                        acc[key] = acc.get(key, BRatFn.from_poly(ZERO)) + v
            nxt[d] = ProfileTable(d, k, acc)
        powers = nxt
        sign = Fraction(1 if m % 2 else -1, m)
        for key, v in powers[n].entries.items():
            log_n[key] = log_n.get(key, BRatFn.from_poly(ZERO)) + v * sign
    scale = ALPHA * n
    return ProfileTable(n, k, {key: v * scale for key, v in log_n.items() if not v.is_zero()})


def c_table(k: int, n: int) -> Dict[ProfileKey, BPoly]:
    """Every nonzero c coefficient of degree n."""
    return {key: v * z_aut(key.lam) for key, v in _scaled_tau(k, n).items()}


def h_table(k: int, n: int) -> Dict[ProfileKey, BPoly]:
    """Every nonzero h coefficient of degree n."""
    return dict(_h_poly(k, n))


def c_value(key: ProfileKey) -> BPoly:
    return _scaled_tau(key.k, key.n).get(key, ZERO) * z_aut(key.lam)


def h_value(key: ProfileKey) -> BPoly:
    return _h_poly(key.k, key.n).get(key, ZERO)


def coeff_c(k: int, key: ProfileKey) -> CoeffRecord:
    """c = z_lam (1+b)^len(lam) [p_lam q_mu...] tau, asserted polynomial."""
    if key.k != k:
        raise ValueError(f"key has {len(key.mus)} mu partitions, expected {k + 1}")
    return CoeffRecord(key, c_value(key), "c")


def coeff_h(k: int, key: ProfileKey) -> CoeffRecord:
    """h = [p_lam q_mu...] Psi, asserted polynomial."""
    if key.k != k:
        raise ValueError(f"key has {len(key.mus)} mu partitions, expected {k + 1}")
    return CoeffRecord(key, h_value(key), "h")


def _length_choices(n: int, lengths: Sequence[int]) -> Iterator[tuple]:
    parts = all_partitions(n)
    pools = [[p for p in parts if len(p) == l] for l in lengths]
    return itertools.product(*pools)


def _marginal(kind: str, k: int, lam, mu, lengths: Sequence[int]) -> CoeffRecord:
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lengths) != k:
        raise ValueError(f"expected {k} lengths, got {len(lengths)}")
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError("lambda and mu differ in size")
    value = ZERO
    get = c_value if kind == "c" else h_value
    for rest in _length_choices(n, lengths):
        value = value + get(ProfileKey(lam, (mu,) + rest))
    key = ProfileKey(lam, (mu,))
    return CoeffRecord(key, value, kind)


def marginal_c(k: int, lam, mu, lengths: Sequence[int]) -> CoeffRecord:
    """Sum of c^lam_{mu, mu1..muk} over mu^i with len(mu^i) = lengths[i-1]."""
    return _marginal("c", k, lam, mu, lengths)


def marginal_h(k: int, lam, mu, lengths: Sequence[int]) -> CoeffRecord:
    return _marginal("h", k, lam, mu, lengths)


# -- structural identities ------------------------------------------------------
def degree_bounds(key: ProfileKey) -> tuple:
    """(d_-1, d_0, ..., d_k) bounding deg c from above."""
    k, n = key.k, key.n
    lens = [len(m) for m in key.mus]
    total = sum(lens)
    return (k * n + len(key.lam) - total,) + tuple(k * n - (total - l) for l in lens)


def h_degree_bound(key: ProfileKey) -> int:
    return key.k * key.n + 2 - len(key.lam) - sum(len(m) for m in key.mus)


def check_degree_bounds(key: ProfileKey) -> bool:
    c = c_value(key)
    h = h_value(key)
    # the zero polynomial has degree -infinity and meets every bound
    c_ok = c.is_zero() or c.degree <= min(degree_bounds(key))
    return c_ok and (h.is_zero() or h.degree <= h_degree_bound(key))


def duality_symmetry_check(k: int, key: ProfileKey) -> bool:
    """c/(z (1+b)^len) is symmetric under lam <-> mu0 and under permuting the mus."""
    scaled = _scaled_tau(k, key.n)

    def tau_entry(lam, mus):
        return BRatFn(scaled.get(ProfileKey(lam, tuple(mus)), ZERO), ALPHA ** len(lam))

    base = tau_entry(key.lam, key.mus)
    if tau_entry(key.mus[0], (key.lam,) + key.mus[1:]) != base:
        return False
    return all(tau_entry(key.lam, perm) == base for perm in set(itertools.permutations(key.mus)))


def mult_sides(key: ProfileKey) -> Tuple[BPoly, BPoly]:
    """(c^lam_{mu0..muk}, sum_nu c^lam_{mu0..mu(k-2),nu} c^nu_{mu(k-1),muk})."""
    k = key.k
    if k < 2:
        raise ValueError("multiplicativity needs k >= 2")
    rhs = ZERO
    for nu in all_partitions(key.n):
        left = c_value(ProfileKey(key.lam, key.mus[: k - 1] + (nu,)))
        if left.is_zero():
            continue
        rhs = rhs + left * c_value(ProfileKey(nu, key.mus[k - 1 :]))
    return c_value(key), rhs


def mult_check(k: int, key: ProfileKey) -> bool:
    lhs, rhs = mult_sides(key)
    return lhs == rhs


def somh_sides(k: int, lam: Partition, mus: Sequence[Partition]) -> Tuple[BPoly, BPoly]:
    """(sum_tau h(b), (1+b)^e sum_tau h(0)) with e = kn + 1 - len(lam) - sum len(mu^j), j < k."""
    n = sum(lam)
    total = ZERO
    for tau in all_partitions(n):
        total = total + h_value(ProfileKey(tuple(lam), tuple(mus) + (tau,)))
    e = k * n + 1 - len(lam) - sum(len(m) for m in mus)
    at0 = total(0)
    if e < 0:
        return total, BRatFn(BPoly([at0]), ALPHA ** -e)
    return total, ALPHA ** e * at0


def somh_check(k: int, lam: Partition, mus: Sequence[Partition]) -> bool:
    lhs, rhs = somh_sides(k, lam, mus)
    return lhs == rhs


def bminus1_sides(key: ProfileKey) -> Tuple[Fraction, Fraction]:
    """([b^d] c, (-1)^d c(-1)) with d = d_-1."""
    d = degree_bounds(key)[0]
    c = c_value(key)
    return c[d], (-1) ** d * c(-1)


def corollary_bminus1_check(key: ProfileKey) -> bool:
    lhs, rhs = bminus1_sides(key)
    return lhs == rhs


def _h0_colour_sum(lam: Partition, mus: Tuple[Partition, ...], k: int) -> Fraction:
    """sum over tau |- n of h^lam_{mus, tau}(0)."""
    n = sum(lam)
    return sum((h_value(ProfileKey(lam, mus + (tau,)))(0) for tau in all_partitions(n)), Fraction(0))


def _splittings(parts: Sequence[int], pools: List[Partition]) -> Iterator[List[Tuple[Partition, ...]]]:
    """Ordered ways of cutting every partition in ``pools`` into pieces of sizes ``parts``."""
    if not parts:
        if all(not p for p in pools):
            yield []
        return
    size = parts[0]
    for pieces in itertools.product(*(sub_partitions(p, size) for p in pools)):
        rest = [difference(p, s) for p, s in zip(pools, pieces)]
        for tail in _splittings(parts[1:], rest):
            yield [tuple(pieces)] + tail


def topdeg_sides(key: ProfileKey) -> Tuple[Fraction, Fraction]:
    """([b^d_k] c / z_lam, the decomposition over mu^k-connected orientable pieces)."""
    k = key.k
    d = degree_bounds(key)[-1]
    lhs = c_value(key)[d] / z_aut(key.lam)
    last = key.mus[-1]
    pools = [key.lam] + list(key.mus[:-1])
    rhs = Fraction(0)
    for order in set(itertools.permutations(last)):
        for split in _splittings(order, pools):
            term = Fraction(1)
            for size, pieces in zip(order, split):
                term *= _h0_colour_sum(pieces[0], tuple(pieces[1:]), k) / size
                if not term:
                    break
            rhs += term
    return lhs, rhs / factorial(len(last))


def topdeg_check(key: ProfileKey) -> bool:
    lhs, rhs = topdeg_sides(key)
    return lhs == rhs
