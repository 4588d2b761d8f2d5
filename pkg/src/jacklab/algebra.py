"""Exact arithmetic over Q, Q[b] and Q(b).

``b`` is the canonical variable; Jack's parameter is ``alpha = b + 1`` and only
enters through :func:`alpha_shift` / :func:`alpha_unshift`.

Polynomials are stored as a tuple of integer numerators together with one
positive common denominator, which keeps the hot loops (products of Jack
coefficients) in machine-friendly integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class InvalidCoefficientError(ValueError):
    """A series coefficient with a vanishing denominator was requested."""


class NotPolynomialError(ArithmeticError):
    """A rational function expected to be a polynomial is not one."""


def bigrat_to_str(x: Scalar) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def bigrat_from_str(s: str) -> Fraction:
    return Fraction(s)


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _content(cs: Iterable[int]) -> int:
    return reduce(gcd, cs, 0)


def _primitive(cs: list[int]) -> list[int]:
    c = _content(cs)
    if cs[-1] < 0:
        c = -c
    return [x // c for x in cs]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Primitive pseudo-remainder of integer coefficient lists (low to high)."""
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        _trim(r)
        if r:
            r = _primitive(r)
    return r


class BPoly:
    """Polynomial in ``b`` with rational coefficients; immutable.

    ``BPoly([c0, c1, ...])`` is ``c0 + c1*b + ...``; coefficients may be ints,
    Fractions or ``"num/den"`` strings.
    """

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._set(nums, den)

    def _set(self, nums: list[int], den: int) -> None:
        _trim(nums)
        if not nums:
            den = 1
        else:
            g = gcd(_content(nums), den)
            if g != 1:
                nums = [x // g for x in nums]
                den //= g
        self._nums = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, nums: list[int], den: int) -> "BPoly":
        p = cls.__new__(cls)
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        p._set(nums, den)
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "BPoly":
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    # -- inspection ------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._nums)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._nums):
            return Fraction(self._nums[i], self._den)
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._nums)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._nums) - 1

    def is_zero(self) -> bool:
        return not self._nums

    def is_one(self) -> bool:
        return self._nums == (1,) and self._den == 1

    @property
    def leading(self) -> Fraction:
        if not self._nums:
            return Fraction(0)
        return Fraction(self._nums[-1], self._den)

    def has_integer_coeffs(self) -> bool:
        return self._den == 1

    def is_nonneg_integral(self) -> bool:
        return self._den == 1 and all(x >= 0 for x in self._nums)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "BPoly":
        if isinstance(other, BPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "BPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._nums:
            return self
        if not self._nums:
            return other
        da, db = self._den, other._den
        if da == db:
            a, b, den = self._nums, other._nums, da
        else:
            g = gcd(da, db)
            fa, fb = db // g, da // g
            a = [x * fa for x in self._nums]
            b = [x * fb for x in other._nums]
            den = da * fa
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] += y
        return BPoly._raw(out, den)

    __radd__ = __add__

    def __neg__(self) -> "BPoly":
        return BPoly._raw([-x for x in self._nums], self._den)

    def __sub__(self, other) -> "BPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BPoly":
        return (-self) + other

    def __mul__(self, other) -> "BPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return BPoly._raw([x * other.numerator for x in self._nums], self._den * other.denominator)
        if not isinstance(other, BPoly):
            return NotImplemented
        a, b = self._nums, other._nums
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return BPoly._raw(out, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "BPoly") -> tuple["BPoly", "BPoly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = list(other.coeffs)
        dd = len(d) - 1
        lead = d[-1]
        q = [Fraction(0)] * max(len(r) - dd, 0)
        for i in range(len(r) - 1 - dd, -1, -1):
            c = r[i + dd] / lead
            q[i] = c
            if c:
                for j, y in enumerate(d):
                    r[i + j] -= c * y
        return BPoly(q), BPoly(_trim(r[:dd]) if dd else [])

    def __floordiv__(self, other: "BPoly") -> "BPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "BPoly") -> "BPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "BPoly":
        """Quotient ``self / other``; raises :class:`NotPolynomialError` on a remainder."""
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotPolynomialError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other) -> "BRatFn":
        if isinstance(other, (int, Fraction)):
            return BRatFn.from_poly(self * (1 / Fraction(other)))
        return BRatFn(self, other)

    def monic(self) -> "BPoly":
        if not self._nums:
            return self
        return BPoly._raw(list(self._nums), self._nums[-1])

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def shift(self, c: Scalar) -> "BPoly":
        """The polynomial ``b -> p(b + c)``."""
        c = Fraction(c)
        lin = BPoly([c, 1])
        out = ZERO
        for coef in reversed(self.coeffs):
            out = out * lin + coef
        return out

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, BRatFn):
            return other == self
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._nums == other._nums and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nums, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._nums)

    # -- text ------------------------------------------------------------
    def to_json(self) -> list[str]:
        return [bigrat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "BPoly":
        return cls(Fraction(s) for s in data)

    def __str__(self) -> str:
        if not self._nums:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("b" if i == 1 else f"b^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BPoly({str(self)!r})"


ZERO = BPoly()
ONE = BPoly([1])
B = BPoly([0, 1])
ALPHA = BPoly([1, 1])


def poly_eval(p: BPoly, x: Scalar) -> Fraction:
    """Horner evaluation of ``p`` at ``b = x``."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p._nums):
        acc = acc * x + c
    return acc / p._den


def poly_gcd(a: BPoly, b: BPoly) -> BPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return ONE
    x, y = _primitive(list(a._nums)), _primitive(list(b._nums))
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _prem(x, y)
        x, y = y, r
    return BPoly._raw(list(x), x[-1])


def alpha_shift(p: BPoly) -> BPoly:
    """Rewrite a polynomial in ``alpha`` as a polynomial in ``b`` (alpha = b + 1)."""
    return p.shift(1)


def alpha_unshift(p: BPoly) -> BPoly:
    """Inverse of :func:`alpha_shift`: a polynomial in ``b`` rewritten in ``alpha``."""
    return p.shift(-1)


class BRatFn:
    """Reduced quotient ``num/den`` of polynomials in ``b`` with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ONE if den is None else _as_poly(den)
        n, d = _normalize(num, den)
        self.num = n
        self.den = d

    @classmethod
    def _trusted(cls, num: BPoly, den: BPoly) -> "BRatFn":
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_poly(cls, p: BPoly) -> "BRatFn":
        return cls._trusted(p, ONE)

    # -- inspection ------------------------------------------------------
    def is_poly(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> BPoly:
        """The polynomial this function equals; :class:`NotPolynomialError` otherwise."""
        if not self.den.is_one():
            raise NotPolynomialError(f"{self} is not a polynomial in b")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x: Scalar) -> Fraction:
        d = poly_eval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at b={x}")
        return poly_eval(self.num, x) / d

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "BRatFn":
        if isinstance(other, BRatFn):
            return other
        if isinstance(other, BPoly):
            return BRatFn.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return BRatFn.from_poly(BPoly.constant(other))
        return NotImplemented

    def __add__(self, other) -> "BRatFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return BRatFn.from_poly(self.num + other.num)
        if self.den == other.den:
            return BRatFn(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        fa = other.den.exact_div(g)
        fb = self.den.exact_div(g)
        return BRatFn(self.num * fa + other.num * fb, self.den * fa)

    __radd__ = __add__

    def __neg__(self) -> "BRatFn":
        return BRatFn._trusted(-self.num, self.den)

    def __sub__(self, other) -> "BRatFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BRatFn":
        return (-self) + other

    def __mul__(self, other) -> "BRatFn":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RZERO
            return BRatFn._trusted(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_one():
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if not d1.is_one():
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        d = d1 * d2
        lc = d.leading
        if lc != 1:
            return BRatFn._trusted((n1 * n2) * (1 / lc), d * (1 / lc))
        return BRatFn._trusted(n1 * n2, d)

    __rmul__ = __mul__

    def inverse(self) -> "BRatFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return BRatFn(self.den, self.num)

    def __truediv__(self, other) -> "BRatFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "BRatFn":
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "BRatFn":
        if e < 0:
            return self.inverse() ** (-e)
        return BRatFn._trusted(self.num ** e, self.den ** e)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- text ------------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "BRatFn":
        return cls(BPoly.from_json(data["num"]), BPoly.from_json(data["den"]))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"BRatFn({str(self)!r})"


def _as_poly(x) -> BPoly:
    if isinstance(x, BPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BPoly.constant(x)
    return BPoly(x)


def _normalize(num: BPoly, den: BPoly) -> tuple[BPoly, BPoly]:
    if den.is_zero():
        raise InvalidCoefficientError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.degree > 0:
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.leading
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return num, den


def ratfn_normalize(num: BPoly, den: BPoly) -> BRatFn:
    """Canonical reduced form of ``num/den`` (monic denominator)."""
    return BRatFn(num, den)


RZERO = BRatFn._trusted(ZERO, ONE)
RONE = BRatFn._trusted(ONE, ONE)
