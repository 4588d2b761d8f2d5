"""Symmetric functions in the power-sum and monomial bases, and Jack polynomials.

Jack polynomials are built from their three defining properties only: for each
``n`` the partitions are processed from the bottom of a total order refining
dominance (reverse lexicographic, read backwards), each ``m_lam`` is projected
orthogonally to the Jack polynomials already built, and the result is scaled so
that ``[m_{1^n}] J_lam = n!``.  Every coefficient is then asserted to be a
polynomial in ``b``.
"""

from __future__ import annotations

import json
import logging
import os
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Dict, Mapping, Optional, Union

from .algebra import ALPHA, ONE, RZERO, ZERO, BPoly, BRatFn, NotPolynomialError, poly_gcd
from .partitions import Partition, all_partitions, alpha_content, as_partition, boxes, dominance_leq, hook_products, z_aut

log = logging.getLogger(__name__)

CACHE_FORMAT = "jacklab-jack-cache"
CACHE_VERSION = 1
CONTENT_CONVENTION = "alpha*(col-1)-(row-1)"

Coefficient = Union[int, Fraction, BPoly, BRatFn]


def _to_ratfn(x: Coefficient) -> BRatFn:
    if isinstance(x, BRatFn):
        return x
    return BRatFn._coerce(x)


class _Expr:
    """Degree-homogeneous symmetric function: partition -> BRatFn coefficient."""

    __slots__ = ("degree", "terms")
    basis = ""

    def __init__(self, degree: int, terms: Mapping[Partition, Coefficient] = ()):
        clean: Dict[Partition, BRatFn] = {}
        for key, val in dict(terms).items():
            key = as_partition(key)
            if sum(key) != degree:
                raise ValueError(f"{list(key)} is not a partition of {degree}")
            val = _to_ratfn(val)
            if not val.is_zero():
                clean[key] = val
        self.degree = degree
        self.terms = clean

    def coeff(self, mu: Partition) -> BRatFn:
        return self.terms.get(tuple(mu), RZERO)

    def items(self):
        """(partition, coefficient) pairs in canonical partition order."""
        return [(mu, self.terms[mu]) for mu in all_partitions(self.degree) if mu in self.terms]

    def _check(self, other: "_Expr") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {self.basis} and {other.basis} expansions")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "_Expr"):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, RZERO) + v
        return type(self)(self.degree, out)

    def __neg__(self):
        return type(self)(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "_Expr"):
        return self + (-other)

    def scale(self, c: Coefficient):
        c = _to_ratfn(c)
        return type(self)(self.degree, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.degree == other.degree and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"({v})*{self.basis}{list(k)}" for k, v in self.items()) or "0"
        return f"{type(self).__name__}({body})"

    def to_json(self) -> list:
        return [[list(k), v.to_json()] for k, v in self.items()]


class PSExpr(_Expr):
    """Expansion in the power-sum basis ``p_mu``."""

    basis = "p"


class MonExpr(_Expr):
    """Expansion in the monomial basis ``m_mu``."""

    basis = "m"


def p_basis(mu: Partition) -> PSExpr:
    return PSExpr(sum(mu), {tuple(mu): 1})


def m_basis(mu: Partition) -> MonExpr:
    return MonExpr(sum(mu), {tuple(mu): 1})


# -- basis change --------------------------------------------------------
def _p_in_m_entry(rho: Partition, lam: Partition) -> int:
    """[m_lam] p_rho: ways to drop the parts of rho into the rows of lam exactly."""

    @lru_cache(maxsize=None)
    def rec(i: int, rest: tuple) -> int:
        if i == len(rho):
            return int(not any(rest))
        total = 0
        seen = set()
        for j, cap in enumerate(rest):
            if cap >= rho[i] and (j, cap) not in seen:
                seen.add((j, cap))
                nxt = rest[:j] + (cap - rho[i],) + rest[j + 1 :]
                total += rec(i + 1, nxt)
        return total

    return rec(0, tuple(lam))


@lru_cache(maxsize=None)
def p_to_m_matrix(n: int) -> Dict[Partition, Dict[Partition, int]]:
    """``M[rho][lam] = [m_lam] p_rho`` (nonzero only when rho <= lam)."""
    parts = all_partitions(n)
    return {rho: {lam: v for lam in parts if dominance_leq(rho, lam) and (v := _p_in_m_entry(rho, lam))} for rho in parts}


@lru_cache(maxsize=None)
def m_to_p_matrix(n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    """``Q[lam][rho] = [p_rho] m_lam``, by triangular inversion of the p->m matrix."""
    parts = all_partitions(n)  # descending: m_lam only involves p_rho with rho <= lam
    M = p_to_m_matrix(n)
    inv: Dict[Partition, Dict[Partition, Fraction]] = {}
    # p_rho = M[rho][rho] m_rho + sum_{lam > rho} M[rho][lam] m_lam, solved from the top down
    for rho in parts:
        row: Dict[Partition, Fraction] = {rho: Fraction(1)}
        for lam, c in M[rho].items():
            if lam != rho:
                for sigma, d in inv[lam].items():
                    row[sigma] = row.get(sigma, Fraction(0)) - c * d
        diag = M[rho][rho]
        inv[rho] = {k: v / diag for k, v in row.items() if v}
    return inv


def m_to_p(f: MonExpr) -> PSExpr:
    Q = m_to_p_matrix(f.degree)
    out: Dict[Partition, BRatFn] = {}
    for lam, c in f.terms.items():
        for rho, q in Q[lam].items():
            out[rho] = out.get(rho, RZERO) + c * q
    return PSExpr(f.degree, out)


def p_to_m(f: PSExpr) -> MonExpr:
    M = p_to_m_matrix(f.degree)
    out: Dict[Partition, BRatFn] = {}
    for rho, c in f.terms.items():
        for lam, v in M[rho].items():
            out[lam] = out.get(lam, RZERO) + c * v
    return MonExpr(f.degree, out)


# -- scalar product ----------------------------------------------------------
@lru_cache(maxsize=None)
def hall_weight(rho: Partition) -> BPoly:
    """<p_rho, p_rho>_alpha = z_rho * alpha^len(rho)."""
    return ALPHA ** len(rho) * z_aut(rho)


def hall_scalar(f: PSExpr, g: PSExpr) -> BRatFn:
    if not isinstance(f, PSExpr) or not isinstance(g, PSExpr):
        raise TypeError("hall_scalar expects power-sum expansions")
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    acc = RZERO
    for rho, c in f.terms.items():
        d = g.terms.get(rho)
        if d is not None:
            acc = acc + c * d * hall_weight(rho)
    return acc


# -- Jack polynomials ----------------------------------------------------------
def _build_jacks(n: int) -> Dict[Partition, Dict[Partition, BPoly]]:
    if n == 0:
        return {(): {(): ONE}}
    parts = all_partitions(n)
    ones = (1,) * n
    Q = m_to_p_matrix(n)
    built: Dict[Partition, Dict[Partition, BPoly]] = {}
    norms: Dict[Partition, BPoly] = {}
    for lam in reversed(parts):
        mvec = Q[lam]
        weighted = {rho: hall_weight(rho) * c for rho, c in mvec.items()}
        projections = []
        lcm = ONE
        for mu, jmu in built.items():
            s = ZERO
            for rho, w in weighted.items():
                if rho in jmu:
                    s = s + w * jmu[rho]
            if s.is_zero():
                continue
            g = poly_gcd(s, norms[mu])
            a, d = s.exact_div(g), norms[mu].exact_div(g)
            projections.append((a, d, mu))
            lcm = lcm * d.exact_div(poly_gcd(lcm, d))
        raw: Dict[Partition, BPoly] = {rho: lcm * c for rho, c in mvec.items()}
        for a, d, mu in projections:
            factor = a * lcm.exact_div(d)
            for rho, c in built[mu].items():
                raw[rho] = raw.get(rho, ZERO) - factor * c
        lead = raw[ones]
        try:
            jl = {rho: c.exact_div(lead) for rho, c in raw.items() if not c.is_zero()}
        except NotPolynomialError as exc:
            raise NotPolynomialError(f"Jack polynomial {list(lam)} has a non-polynomial coefficient") from exc
        built[lam] = {rho: jl[rho] for rho in parts if rho in jl}
        norms[lam] = sum((hall_weight(rho) * c * c for rho, c in jl.items()), ZERO)
    return {lam: built[lam] for lam in parts}


class JackCache:
    """Write-once store of Jack polynomials, keyed by degree.

    With ``cache_dir`` set, each degree is persisted as ``jack_n<N>.jsonl``: a
    JSON header line (format, version, content convention) followed by one
    ``partition<TAB>coefficients`` record per partition.  A header mismatch or
    an unreadable file triggers a rebuild with a warning.
    """

    def __init__(self, cache_dir: Optional[Union[str, Path]] = None, check: bool = False):
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.check = check
        self._store: Dict[int, Dict[Partition, Dict[Partition, BPoly]]] = {}

    def _header(self, n: int) -> dict:
        return {"format": CACHE_FORMAT, "version": CACHE_VERSION, "content_convention": CONTENT_CONVENTION, "n": n}

    def _path(self, n: int) -> Path:
        return self.cache_dir / f"jack_n{n}.jsonl"

    def _load(self, n: int):
        path = self._path(n)
        if not path.exists():
            return None
        try:
            with path.open() as fh:
                header = json.loads(fh.readline())
                if header != self._header(n):
                    log.warning("jack cache %s has a stale header; recomputing", path)
                    return None
                table = {}
                for line in fh:
                    if not line.strip():
                        continue
                    key, coeffs = line.rstrip("\n").split("\t")
                    lam = as_partition(json.loads(key))
                    table[lam] = {as_partition(mu): BRatFn.from_json(c).as_poly() for mu, c in json.loads(coeffs)}
            if set(table) != set(all_partitions(n)):
                raise ValueError("incomplete record set")
            return table
        except (ValueError, KeyError, TypeError, NotPolynomialError) as exc:
            log.warning("jack cache %s is corrupt (%s); recomputing", path, exc)
            return None

    def _save(self, n: int, table) -> None:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self._path(n)
        tmp = path.with_suffix(".tmp")
        with tmp.open("w") as fh:
            fh.write(json.dumps(self._header(n)) + "\n")
            for lam in all_partitions(n):
                coeffs = [[list(mu), BRatFn.from_poly(c).to_json()] for mu, c in table[lam].items()]
                fh.write(json.dumps(list(lam)) + "\t" + json.dumps(coeffs) + "\n")
        os.replace(tmp, path)

    def table(self, n: int) -> Dict[Partition, Dict[Partition, BPoly]]:
        """lam -> (rho -> [p_rho] J_lam) for every lam of ``n``; coefficients are BPoly."""
        if n not in self._store:
            table = self._load(n) if self.cache_dir else None
            if table is None:
                table = _build_jacks(n)
                if self.cache_dir:
                    self._save(n, table)
            if self.check:
                _assert_jack_axioms(n, table)
            self._store[n] = table
        return self._store[n]

    def jack(self, lam: Partition) -> PSExpr:
        lam = as_partition(lam)
        return PSExpr(sum(lam), self.table(sum(lam))[lam])


def _assert_jack_axioms(n: int, table) -> None:
    exprs = {lam: PSExpr(n, coeffs) for lam, coeffs in table.items()}
    lams = list(exprs)
    for i, lam in enumerate(lams):
        mon = p_to_m(exprs[lam])
        assert mon.coeff((1,) * n) == factorial(n), f"normalisation fails for {lam}"
        assert all(dominance_leq(mu, lam) for mu in mon.terms), f"triangularity fails for {lam}"
        for mu in lams[i + 1 :]:
            assert hall_scalar(exprs[lam], exprs[mu]).is_zero(), f"<J{lam}, J{mu}> != 0"


_default_cache: Optional[JackCache] = None


def default_cache() -> JackCache:
    """Process-wide cache; honours ``JACKLAB_CACHE`` for on-disk persistence."""
    global _default_cache
    if _default_cache is None:
        _default_cache = JackCache(os.environ.get("JACKLAB_CACHE") or None)
    return _default_cache


def set_default_cache(cache: JackCache) -> None:
    global _default_cache
    _default_cache = cache


def jack_table(n: int) -> Dict[Partition, Dict[Partition, BPoly]]:
    return default_cache().table(n)


def jack(lam: Partition) -> PSExpr:
    """J_lam^(alpha) in the power-sum basis, alpha = b + 1."""
    return default_cache().jack(lam)


def jack_norm(lam: Partition) -> BPoly:
    """j_lam = <J_lam, J_lam>_alpha from the two deformed hook products."""
    h = hook_products(tuple(lam))
    return h.hook * h.hook_prime


def principal_spec(lam: Partition, u: Coefficient) -> BRatFn:
    """J_lam(u, u, ...) via the product of (u + alpha-content) over boxes."""
    u = _to_ratfn(u)
    out = BRatFn.from_poly(ONE)
    for box in boxes(tuple(lam)):
        out = out * (u + alpha_content(box))
    return out


def specialize(f: PSExpr, u: Coefficient) -> BRatFn:
    """Evaluate ``f`` with every power sum p_i set to ``u``."""
    u = _to_ratfn(u)
    acc = RZERO
    for rho, c in f.terms.items():
        acc = acc + c * u ** len(rho)
    return acc


def extract_p_coeff(f: PSExpr, mu: Partition) -> BRatFn:
    """[p_mu] f."""
    if sum(mu) != f.degree:
        raise ValueError(f"|mu| = {sum(mu)} differs from the degree {f.degree}")
    return f.coeff(tuple(mu))
