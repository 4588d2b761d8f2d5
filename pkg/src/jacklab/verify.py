"""Named verification suites; each returns a deterministic :class:`SuiteReport`."""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional

from .algebra import ALPHA, BPoly, BRatFn, bigrat_to_str
from .constellations import (
    LabelledConstellation,
    connected_components,
    dual,
    euler_characteristic,
    is_orientable,
    profile,
    restrict,
    rooted_census,
)
from .matchings import count_F_via_characters, delta_lambda, enumerate_F, epsilon, is_bipartite, matching_census
from .partitions import all_partitions, dominance_leq, hook_products, multiplicity, z_aut
from .series import (
    ProfileKey,
    bminus1_sides,
    c_table,
    c_value,
    degree_bounds,
    h_degree_bound,
    h_table,
    h_value,
    marginal_c,
    mult_sides,
    profile_keys,
    somh_sides,
    topdeg_sides,
)
from .symfunc import hall_scalar, jack, jack_norm, p_to_m, principal_spec, specialize


@dataclass
class Failure:
    key: object
    expected: object
    actual: object


@dataclass
class SuiteReport:
    name: str
    params: dict
    checks: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, key, expected, actual) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(_jsonable(key), _jsonable(expected), _jsonable(actual)))

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "params": self.params,
            "checks": self.checks,
            "passed": self.passed,
            "failures": [asdict(f) for f in self.failures],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _jsonable(x):
    if isinstance(x, BPoly):
        return x.to_json()
    if isinstance(x, Fraction):
        return bigrat_to_str(x)
    if isinstance(x, ProfileKey):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class SuiteParams:
    k_max: int
    n_max: int
    map_n_max: Optional[int] = None
    jack_n_max: int = 8
    threads: int = 1

    def boxes(self, k_min: int = 1):
        for k in range(k_min, self.k_max + 1):
            for n in range(1, self.n_max + 1):
                yield k, n


# -- individual suites -----------------------------------------------------------
def _positivity(rep: SuiteReport, p: SuiteParams) -> None:
    for k, n in p.boxes():
        for kind, table in (("c", c_table(k, n)), ("h", h_table(k, n))):
            for key in profile_keys(k, n):
                val = table.get(key)
                if val is not None:
                    rep.check(val.is_nonneg_integral(), [kind, key], "N[b]", val)


def _matching_identities(rep: SuiteReport, p: SuiteParams, at: int) -> None:
    for k, n in p.boxes():
        census = matching_census(k, n, p.threads)
        for key in profile_keys(k, n):
            full, bip = census.get((key.lam, key.mus), (0, 0))
            expected = bip if at == 0 else full
            rep.check(c_value(key)(at) == expected, ["c", key], expected, c_value(key)(at))
    map_n = p.n_max if p.map_n_max is None else p.map_n_max
    for k in range(1, p.k_max + 1):
        for n in range(1, map_n + 1):
            counts = rooted_census(k, n)
            for key in profile_keys(k, n):
                full, orient = counts.get((key.lam,) + key.mus, (0, 0))
                expected = orient if at == 0 else full
                actual = h_value(key)(at)
                rep.check(actual == expected, ["h", key], expected, actual)


def _marginal(rep: SuiteReport, p: SuiteParams) -> None:
    for k, n in p.boxes():
        census = matching_census(k, n, p.threads)
        parts = all_partitions(n)
        for lam in parts:
            for mu in parts:
                for lengths in itertools.product(range(1, n + 1), repeat=k):
                    rec = marginal_c(k, lam, mu, lengths)
                    full = bip = 0
                    for rest in itertools.product(*([q for q in parts if len(q) == l] for l in lengths)):
                        a, b = census.get((lam, (mu,) + rest), (0, 0))
                        full += a
                        bip += b
                    key = {"k": k, "lambda": list(lam), "mu": list(mu), "lengths": list(lengths)}
                    rep.check(rec.value.is_nonneg_integral(), dict(key, check="N[b]"), "N[b]", rec.value)
                    rep.check(rec.value(1) == full, dict(key, check="b=1"), full, rec.value(1))
                    rep.check(rec.value(0) == bip, dict(key, check="b=0"), bip, rec.value(0))


def _gelfand(rep: SuiteReport, p: SuiteParams) -> None:
    for k, n in p.boxes():
        census = matching_census(k, n, p.threads)
        for key in profile_keys(k, n):
            expected = census.get((key.lam, key.mus), (0, 0))[0]
            actual = count_F_via_characters(key.lam, key.mus)
            rep.check(actual == expected, key, expected, actual)


def _jack_axioms(rep: SuiteReport, p: SuiteParams) -> None:
    samples = (1, 2, -3, Fraction(5, 2))
    for n in range(1, p.n_max + 1):
        parts = all_partitions(n)
        jacks = {lam: jack(lam) for lam in parts}
        for i, lam in enumerate(parts):
            J = jacks[lam]
            mon = p_to_m(J)
            key = list(lam)
            rep.check(mon.coeff((1,) * n) == factorial(n), [key, "normalisation"], factorial(n), mon.coeff((1,) * n))
            off = [list(mu) for mu in mon.terms if not dominance_leq(mu, lam)]
            rep.check(not off, [key, "triangularity"], [], off)
            for mu in parts[i + 1 :]:
                val = hall_scalar(J, jacks[mu])
                rep.check(val.is_zero(), [key, list(mu), "orthogonality"], 0, val)
            norm = jack_norm(lam)
            val = hall_scalar(J, J)
            rep.check(val == norm, [key, "norm"], norm, val)
            hd = hook_products(lam)
            rep.check(norm(0) == hd.H**2, [key, "norm at b=0"], hd.H**2, norm(0))
            rep.check(norm(1) == hd.H2, [key, "norm at b=1"], hd.H2, norm(1))
            for u in samples:
                lhs, rhs = specialize(J, u), principal_spec(lam, u)
                rep.check(lhs == rhs, [key, "principal specialisation", str(u)], rhs, lhs)


def _keys(p: SuiteParams, k_min: int = 1):
    for k, n in p.boxes(k_min):
        yield from profile_keys(k, n)


def _mult(rep: SuiteReport, p: SuiteParams) -> None:
    for key in _keys(p, 2):
        lhs, rhs = mult_sides(key)
        rep.check(lhs == rhs, key, lhs, rhs)


def _degrees(rep: SuiteReport, p: SuiteParams) -> None:
    for key in _keys(p):
        c, h = c_value(key), h_value(key)
        bound = min(degree_bounds(key))
        rep.check(c.is_zero() or c.degree <= bound, ["c", key], bound, c.degree)
        hb = h_degree_bound(key)
        rep.check(h.is_zero() or h.degree <= hb, ["h", key], hb, h.degree)


def _somh(rep: SuiteReport, p: SuiteParams) -> None:
    for k, n in p.boxes():
        parts = all_partitions(n)
        for lam in parts:
            for mus in itertools.product(parts, repeat=k):
                lhs, rhs = somh_sides(k, lam, mus)
                rep.check(lhs == rhs, {"k": k, "lambda": list(lam), "mus": [list(m) for m in mus]}, rhs, lhs)


def _bminus1(rep: SuiteReport, p: SuiteParams) -> None:
    for key in _keys(p):
        lhs, rhs = bminus1_sides(key)
        rep.check(lhs == rhs, key, rhs, lhs)


def _topdeg(rep: SuiteReport, p: SuiteParams) -> None:
    for key in _keys(p):
        lhs, rhs = topdeg_sides(key)
        rep.check(lhs == rhs, key, rhs, lhs)


def _tau_entry(key: ProfileKey):
    """c / (z_lam (1+b)^len(lam)), the raw coefficient of tau."""
    return c_value(key) / (ALPHA ** len(key.lam) * z_aut(key.lam))


def _duality(rep: SuiteReport, p: SuiteParams) -> None:
    for key in _keys(p):
        base = _tau_entry(key)
        swapped = ProfileKey(key.mus[0], (key.lam,) + key.mus[1:])
        other = _tau_entry(swapped)
        rep.check(base == other, [key, "lambda<->mu0"], base, other)
        for perm in sorted(set(itertools.permutations(key.mus))):
            if perm != key.mus:
                val = _tau_entry(ProfileKey(key.lam, perm))
                rep.check(val == base, [key, "permute", list(perm)], base, val)


def _lassalle_rect(rep: SuiteReport, p: SuiteParams) -> None:
    from .lassalle import jack_rect_via_tau, lassalle_rect_report, padding_sides

    for m in range(2, p.n_max + 1):
        for mu in all_partitions(m):
            if multiplicity(mu, 1):
                continue
            report = lassalle_rect_report(mu)
            for what in ("nonnegative_integral", "degree_bound", "normalisation"):
                rep.check(report[what], [list(mu), what], True, report["poly"])
    for q in range(1, p.jack_n_max + 1):
        for r in range(1, p.jack_n_max // q + 1):
            try:
                jack_rect_via_tau(q, r)
                ok = True
            except AssertionError:
                ok = False
            rep.check(ok, ["rectangle via tau", q, r], True, ok)
    for m in range(2, min(4, p.n_max) + 1):
        for mu in all_partitions(m):
            if multiplicity(mu, 1):
                continue
            for q in range(1, p.jack_n_max + 1):
                for r in range(1, p.jack_n_max // q + 1):
                    if q * r < m:
                        continue
                    lhs, rhs = padding_sides(mu, q, r)
                    rep.check(lhs == rhs, ["padding", list(mu), q, r], rhs, lhs)


def _face_flip_orientable(c: LabelledConstellation, lam) -> bool:
    """Some choice of per-face orientation makes every delta bipartite."""
    n = c.n
    eps, dl = c.deltas[0], c.deltas[-1]
    face = [-1] * (2 * n)
    faces = 0
    for x in range(2 * n):
        if face[x] != -1:
            continue
        cur = x
        while face[cur] == -1:
            face[cur] = faces
            face[eps[cur]] = faces
            cur = dl[eps[cur]]
        faces += 1
    for flips in itertools.product((0, 1), repeat=faces):
        col = [(x & 1) ^ flips[face[x]] for x in range(2 * n)]
        if all(col[x] != col[d[x]] for d in c.deltas for x in range(2 * n)):
            return True
    return False


def _bijections(rep: SuiteReport, p: SuiteParams) -> None:
    map_n = p.n_max if p.map_n_max is None else p.map_n_max
    for k in range(1, p.k_max + 1):
        for n in range(1, map_n + 1):
            for key in profile_keys(k, n):
                elements = enumerate_F(key.lam, key.mus)
                located = set(elements)
                for tup in elements:
                    c = LabelledConstellation(k, (epsilon(n),) + tup + (delta_lambda(key.lam),))
                    prof = profile(c)
                    rep.check(prof.as_tuple() == (key.lam,) + key.mus, [key, "profile round trip", c], key, prof.as_tuple())
                    back = enumerate_F(prof.face_type, prof.vertex_types)
                    rep.check(tup in set(back) and tup in located, [key, "locate", c], True, False)
                    oriented = all(is_bipartite(d) for d in tup)
                    orientable = is_orientable(c)
                    rep.check(not oriented or orientable, [key, "oriented implies orientable", c], True, orientable)
                    flip = _face_flip_orientable(c, key.lam)
                    rep.check(flip == orientable, [key, "orientable iff some face orientation is consistent", c], flip, orientable)
                    d = dual(c)
                    want = (key.mus[0], key.lam) + tuple(reversed(key.mus[1:]))
                    rep.check(profile(d).as_tuple() == want, [key, "dual profile", c], want, profile(d).as_tuple())
                    rep.check(dual(d) == c, [key, "dual involution", c], True, False)
                    rep.check(is_orientable(d) == orientable, [key, "dual orientability", c], orientable, is_orientable(d))
                    for comp in connected_components(c):
                        chi = euler_characteristic(restrict(c, comp))
                        rep.check(chi <= 2, [key, "euler bound", c], "<= 2", chi)
            counts = rooted_census(k, n)
            for key, val in counts.items():
                lam, mus = key[0], key[1:]
                other = (mus[0], lam) + tuple(reversed(mus[1:]))
                rep.check(counts.get(other) == val, ["rooted count duality", key], val, counts.get(other))


SUITES: Dict[str, Callable[[SuiteReport, SuiteParams], None]] = {
    "positivity": _positivity,
    "b0": lambda rep, p: _matching_identities(rep, p, 0),
    "b1": lambda rep, p: _matching_identities(rep, p, 1),
    "marginal": _marginal,
    "gelfand": _gelfand,
    "jack-axioms": _jack_axioms,
    "mult": _mult,
    "degrees": _degrees,
    "somh": _somh,
    "bminus1": _bminus1,
    "topdeg": _topdeg,
    "duality": _duality,
    "lassalle-rect": _lassalle_rect,
    "bijections": _bijections,
}


def run_suite(name: str, k_max: int, n_max: int, map_n_max: Optional[int] = None,
              jack_n_max: int = 8, threads: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = SuiteParams(k_max, n_max, map_n_max, jack_n_max, threads)
    shown = {"k_max": k_max, "n_max": n_max}
    if map_n_max is not None:
        shown["map_n_max"] = map_n_max
    if name == "lassalle-rect":
        shown["jack_n_max"] = jack_n_max
    rep = SuiteReport(name, shown)
    SUITES[name](rep, params)
    return rep
