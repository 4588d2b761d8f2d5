"""Power-sum coefficients theta_mu(lam) of Jack polynomials, rectangular case.

For a rectangle q x r (q parts equal to r) the Jack polynomial is the degree-qr
slice of tau^(1)(-t, p, u=q, u=-r*alpha) where ``u = x`` means every power sum
of that alphabet is set to ``x``.  Because adding parts equal to 1 to mu does
not change the extracted coefficient, theta_mu(q x r) only needs Jack
polynomials of size |mu|, which is what makes large rectangles reachable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from .algebra import ALPHA, ONE, ZERO, BPoly, BRatFn
from .partitions import Partition, all_partitions, as_partition, multiplicity, rectangular, union_and_pad, z_aut
from .symfunc import PSExpr, jack, jack_norm, jack_table, principal_spec


@dataclass(frozen=True)
class ThetaRecord:
    mu: Partition
    lam: Partition
    value: BPoly

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "lambda": list(self.lam), "theta": {"coeffs": self.value.to_json()}}


@dataclass
class QRPoly:
    """Polynomial in (q, r) with coefficients in Q[b]: ``(dq, dr) -> BPoly``."""

    coeffs: Dict[Tuple[int, int], BPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if not v.is_zero()}

    def __call__(self, q, r) -> BPoly:
        out = ZERO
        for (i, j), c in self.coeffs.items():
            out = out + c * (Fraction(q) ** i * Fraction(r) ** j)
        return out

    def degree_q(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    def degree_r(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def scale(self, c) -> "QRPoly":
        return QRPoly({k: v * c for k, v in self.coeffs.items()})

    def in_minus_r(self) -> "QRPoly":
        """The same polynomial written in (q, s) with s = -r."""
        return QRPoly({(i, j): v * (-1) ** j for (i, j), v in self.coeffs.items()})

    def to_json(self) -> list:
        return [{"q": i, "r": j, "poly_b": self.coeffs[(i, j)].to_json()} for i, j in sorted(self.coeffs)]


def theta(mu: Partition, lam: Partition) -> ThetaRecord:
    """theta_mu(lam): 0, [p_mu]J_lam, or binom(n-m+m1, m1) theta_{mu + 1^(n-m)}(lam)."""
    mu, lam = as_partition(mu), as_partition(lam)
    m, n = sum(mu), sum(lam)
    if n < m:
        return ThetaRecord(mu, lam, ZERO)
    if n == m:
        return ThetaRecord(mu, lam, jack_table(n)[lam].get(mu, ZERO))
    m1 = multiplicity(mu, 1)
    padded = union_and_pad(mu, (), n - m)
    value = jack_table(n)[lam].get(padded, ZERO) * comb(n - m + m1, m1)
    return ThetaRecord(mu, lam, value)


def specialized_coeff(mu: Partition, q, r) -> BRatFn:
    """[p_mu t^m] tau^(1)(-t, p, u=q, u=-r alpha), with m = |mu|.

    Equals (-1)^m sum_{nu |- m} [p_mu]J_nu J_nu(q) J_nu(-r alpha) / j_nu.
    """
    mu = as_partition(mu)
    m = sum(mu)
    table = jack_table(m)
    minus_r_alpha = ALPHA * (-Fraction(r))
    acc = BRatFn.from_poly(ZERO)
    for nu in all_partitions(m):
        c = table[nu].get(mu)
        if c is None:
            continue
        spec = principal_spec(nu, q) * principal_spec(nu, minus_r_alpha)
        if spec.is_zero():
            continue
        acc = acc + spec * c / jack_norm(nu)
    return acc * (-1) ** m


def theta_rect(mu: Partition, q: int, r: int) -> BPoly:
    """theta_mu(q x r) for mu without parts equal to 1, via the size-|mu| Jack polynomials."""
    mu = as_partition(mu)
    if multiplicity(mu, 1):
        raise ValueError("theta_rect needs mu without parts equal to 1")
    if q * r < sum(mu):
        return ZERO
    return specialized_coeff(mu, q, r).as_poly()


def jack_rect_via_tau(q: int, r: int) -> PSExpr:
    """(-1)^n sum_{nu |- n} J_nu J_nu(q) J_nu(-r alpha) / j_nu with n = qr.

    Raises ``AssertionError`` if the result is not J of the q x r rectangle.
    """
    n = q * r
    minus_r_alpha = ALPHA * (-r)
    out: Dict[Partition, BRatFn] = {}
    for nu, coeffs in jack_table(n).items():
        w = principal_spec(nu, q) * principal_spec(nu, minus_r_alpha)
        if w.is_zero():
            continue
        w = w / jack_norm(nu) * (-1) ** n
        for rho, c in coeffs.items():
            out[rho] = out.get(rho, BRatFn.from_poly(ZERO)) + w * c
    result = PSExpr(n, out)
    expected = jack(rectangular(q, r))
    if result != expected:
        raise AssertionError(f"rectangular Jack polynomial {q}x{r} differs from the series extraction")
    return result


def padding_sides(mu: Partition, q: int, r: int) -> Tuple[BRatFn, BRatFn]:
    """([p_{mu + 1^(n-m)} t^n], [p_mu t^m]) of tau^(1)(-t, p, u=q, u=-r alpha), n = qr."""
    mu = as_partition(mu)
    n = q * r
    padded = union_and_pad(mu, (), n - sum(mu))
    return specialized_coeff(padded, q, r), specialized_coeff(mu, q, r)


def padding_check(mu: Partition, q: int, r: int) -> bool:
    lhs, rhs = padding_sides(mu, q, r)
    return lhs == rhs


def _lagrange_basis(points: List[int]) -> List[List[Fraction]]:
    """Coefficient lists (low to high) of the Lagrange basis polynomials."""
    basis = []
    for i, xi in enumerate(points):
        poly = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            poly = [Fraction(0)] + poly
            for t in range(len(poly) - 1):
                poly[t] -= xj * poly[t + 1]
            denom *= xi - xj
        basis.append([c / denom for c in poly])
    return basis


def theta_rect_poly(mu: Partition) -> QRPoly:
    """P(q, r) = z_mu theta_mu(q x r), interpolated on the grid {1..m+1}^2.

    The lines q = m + 2 and r = m + 2 are held out and checked; a mismatch
    raises ``ArithmeticError``.
    """
    mu = as_partition(mu)
    if multiplicity(mu, 1):
        raise ValueError("theta_rect_poly needs mu without parts equal to 1")
    m = sum(mu)
    z = z_aut(mu)
    pts = list(range(1, m + 2))
    grid = {(q, r): theta_rect(mu, q, r) * z for q in pts for r in pts}
    basis = _lagrange_basis(pts)
    coeffs: Dict[Tuple[int, int], BPoly] = {}
    for (q, r), val in grid.items():
        if val.is_zero():
            continue
        lq, lr = basis[q - 1], basis[r - 1]
        for i, a in enumerate(lq):
            if not a:
                continue
            for j, b in enumerate(lr):
                if b:
                    coeffs[(i, j)] = coeffs.get((i, j), ZERO) + val * (a * b)
    poly = QRPoly(coeffs)
    edge = m + 2
    for t in range(1, edge + 1):
        for q, r in ((edge, t), (t, edge)):
            if poly(q, r) != theta_rect(mu, q, r) * z:
                raise ArithmeticError(f"interpolant for {list(mu)} fails at held-out point (q, r) = ({q}, {r})")
    return poly


def lassalle_rect_report(mu: Partition) -> dict:
    """Check (-1)^m P in N[q, -r, b], degrees <= m, and [q^m] = (-r)^len(mu)."""
    mu = as_partition(mu)
    m = sum(mu)
    poly = theta_rect_poly(mu).scale((-1) ** m).in_minus_r()
    nonneg = all(c.is_nonneg_integral() for c in poly.coeffs.values())
    degrees = poly.degree_q() <= m and poly.degree_r() <= m
    top = {j: c for (i, j), c in poly.coeffs.items() if i == m}
    normalised = top == {len(mu): ONE}
    return {
        "mu": list(mu),
        "nonnegative_integral": nonneg,
        "degree_bound": degrees,
        "normalisation": normalised,
        "poly": poly.to_json(),
        "ok": nonneg and degrees and normalised,
    }
