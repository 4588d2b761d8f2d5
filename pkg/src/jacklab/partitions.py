"""Integer partitions, their statistics and alpha-deformed hook data.

A partition is a plain tuple of weakly decreasing positive ints; ``()`` is the
empty partition.  Boxes of the Young diagram are ``Box(x, y)`` with 1-based
coordinates: ``x`` is the column and ``y`` the row, and row ``y`` holds
``parts[y-1]`` boxes.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, NamedTuple, Sequence

from .algebra import ALPHA, ONE, BPoly

Partition = tuple  # tuple[int, ...]


class Box(NamedTuple):
    x: int  # column
    y: int  # row

    @property
    def col(self) -> int:
        return self.x

    @property
    def row(self) -> int:
        return self.y


class HookData(NamedTuple):
    hook: BPoly
    hook_prime: BPoly
    H: int
    H2: int


def is_partition(seq: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x > 0 for x in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )


def as_partition(seq: Iterable[int]) -> Partition:
    """Validate and freeze a weakly decreasing sequence of positive ints."""
    t = tuple(seq)
    if not is_partition(t):
        raise ValueError(f"not a partition (must be weakly decreasing positive integers): {list(t)}")
    return t


def parse_partition(text: str) -> Partition:
    """``"3,3,2"`` -> ``(3, 3, 2)``; the empty string gives the empty partition."""
    text = text.strip().strip("[]")
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return as_partition(parts)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. (2,), (1, 1)."""
    if n < 0:
        return ()

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def size(lam: Partition) -> int:
    return sum(lam)


def multiplicity(lam: Partition, i: int) -> int:
    """m_i(lam), the number of parts equal to ``i``."""
    return lam.count(i)


def z_aut(lam: Partition) -> int:
    """z_lam = prod_i m_i! * i^m_i."""
    return prod(factorial(m) * i**m for i, m in Counter(lam).items())


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu <= lam`` in dominance order (sizes must agree)."""
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def boxes(lam: Partition) -> list[Box]:
    return [Box(j + 1, i + 1) for i, row in enumerate(lam) for j in range(row)]


def arm(lam: Partition, box: Box) -> int:
    return lam[box.row - 1] - box.col


def leg(lam: Partition, box: Box) -> int:
    return conjugate(lam)[box.col - 1] - box.row


def classical_hook_product(lam: Partition) -> int:
    conj = conjugate(lam)
    return prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))


def hook_products(lam: Partition) -> HookData:
    """Both alpha-deformed hook products (as polynomials in b) and H_lam, H_2lam."""
    conj = conjugate(lam)
    hook = ONE
    hook_prime = ONE
    for i, row in enumerate(lam):
        for j in range(row):
            a = row - j - 1
            l = conj[j] - i - 1
            hook = hook * (ALPHA * a + (l + 1))
            hook_prime = hook_prime * (ALPHA * (a + 1) + l)
    doubled = tuple(2 * x for x in lam)
    return HookData(hook, hook_prime, classical_hook_product(lam), classical_hook_product(doubled))


def alpha_content(box) -> BPoly:
    """alpha*(x - 1) - (y - 1) for the box in column x, row y, as a polynomial in b.

    With this binding the principal specialisation J_lam(u, u, ...) is the
    product of (u + content) over boxes, e.g. J_[1,1] -> u(u - 1).
    """
    x, y = box
    return ALPHA * (x - 1) - (y - 1)


def union_and_pad(lam: Partition, mu: Partition, ones: int = 0) -> Partition:
    """Multiset union of parts plus ``ones`` extra parts equal to 1."""
    return tuple(sorted(lam + mu + (1,) * ones, reverse=True))


def rectangular(q: int, r: int) -> Partition:
    """The q x r rectangle: ``q`` parts of size ``r``."""
    if q < 1 or r < 1:
        raise ValueError("rectangle sides must be positive")
    return (r,) * q


def sub_partitions(lam: Partition, k: int) -> list[Partition]:
    """Distinct sub-multisets of the parts of ``lam`` summing to ``k``."""
    counts = sorted(Counter(lam).items(), reverse=True)
    out: list[Partition] = []

    def rec(idx: int, rest: int, acc: tuple):
        if rest == 0:
            out.append(acc)
            return
        if idx == len(counts):
            return
        part, m = counts[idx]
        for c in range(min(m, rest // part), -1, -1):
            rec(idx + 1, rest - c * part, acc + (part,) * c)

    rec(0, k, ())
    return out


def difference(lam: Partition, sub: Partition) -> Partition:
    """Parts of ``lam`` left after removing the multiset ``sub``."""
    c = Counter(lam)
    c.subtract(sub)
    if any(v < 0 for v in c.values()):
        raise ValueError(f"{sub} is not contained in {lam}")
    return tuple(sorted(c.elements(), reverse=True))
