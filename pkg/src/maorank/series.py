"""Truncated formal Laurent series in q with exact rational coefficients.

A series stores a dense block of coefficients for exponents
``min_exp .. order``.  Anything above ``order`` is *unknown*, not zero, and
asking for it raises.  Coefficients are kept as ``int`` whenever they are
integral and as ``Fraction`` otherwise; both are exact, the ints just make
the integer-heavy product expansions much faster.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence


class SeriesError(ValueError):
    pass


class InvalidTruncation(SeriesError):
    pass


class NonInvertible(SeriesError):
    pass


class BeyondTruncation(SeriesError):
    pass


class InsufficientPrecision(SeriesError):
    pass


def exact(x) -> int | Fraction:
    """Normalize a rational to ``int`` when integral, else ``Fraction``."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return exact(Fraction(x.numerator, x.denominator))
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


class Discrepancy(NamedTuple):
    exponent: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    min_exp: int
    coeffs: tuple
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order - self.min_exp + 1:
            raise InvalidTruncation(
                f"{len(self.coeffs)} coefficients do not span exponents "
                f"{self.min_exp}..{self.order}")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, min_exp: int = 0,
                    order: int | None = None) -> LaurentSeries:
        """Build a series from coefficients starting at ``min_exp``.

        With ``order`` given, missing coefficients up to it are known zeros
        (the input is a polynomial known exactly); extra ones are dropped.
        """
        cs = [exact(c) for c in coeffs]
        if order is None:
            order = min_exp + len(cs) - 1
        span = order - min_exp + 1
        if span < 0:
            raise InvalidTruncation(f"order {order} below min_exp {min_exp}")
        cs = cs[:span] + [0] * (span - len(cs))
        return cls._normal(min_exp, cs, order)

    @classmethod
    def _normal(cls, min_exp: int, cs: list, order: int) -> LaurentSeries:
        # strip leading zeros; the zero series sits at base 0 when possible
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        if i == len(cs):
            base = 0 if order >= 0 else order + 1
            return cls(base, (0,) * (order - base + 1), order)
        return cls(min_exp + i, tuple(cs[i:]), order)

    # ---- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def valuation(self) -> int | None:
        return None if self.is_zero() else self.min_exp

    def coefficient(self, k: int) -> Fraction:
        if k > self.order:
            raise BeyondTruncation(
                f"coefficient of q^{k} requested, series known only to q^{self.order}")
        if k < self.min_exp:
            return Fraction(0)
        return Fraction(self.coeffs[k - self.min_exp])

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficient(k)

    def items(self):
        """(exponent, coefficient) pairs for every stored exponent."""
        return ((self.min_exp + i, Fraction(c)) for i, c in enumerate(self.coeffs))

    def dense(self, start: int, stop: int) -> list:
        """Raw coefficients for exponents ``start..stop`` inclusive."""
        if stop > self.order:
            raise BeyondTruncation(f"q^{stop} beyond truncation order {self.order}")
        return [self.coeffs[e - self.min_exp] if e >= self.min_exp else 0
                for e in range(start, stop + 1)]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def truncate(self, order: int) -> LaurentSeries:
        if order > self.order:
            raise InsufficientPrecision(
                f"cannot raise truncation order from {self.order} to {order}")
        if order < self.min_exp:
            return zero(order)
        return LaurentSeries._normal(self.min_exp,
                                     list(self.coeffs[:order - self.min_exp + 1]), order)

    def __repr__(self):
        terms = []
        for e, c in self.items():
            if c:
                terms.append(f"{c}*q^{e}" if e else f"{c}")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"LaurentSeries({body} + O(q^{self.order + 1}))"

    # ---- arithmetic -------------------------------------------------------

    def __add__(self, other):
        return add(self, _promote(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _promote(other, self))

    def __rsub__(self, other):
        return sub(_promote(other, self), self)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return mul(self, inverse(other))
        return scale(self, Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return inverse(self) ** (-k)
        base = self
        result = None
        while k:
            if k & 1:
                result = base if result is None else mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result if result is not None else one(self.order - self.min_exp)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by q^k exactly."""
        return LaurentSeries(self.min_exp + k, self.coeffs, self.order + k)


def _promote(x, like: LaurentSeries) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return monomial(x, 0, max(like.order, 0))


def zero(order: int) -> LaurentSeries:
    return LaurentSeries._normal(0, [0] * max(order + 1, 0), order)


def one(order: int) -> LaurentSeries:
    return monomial(1, 0, order)


def monomial(c, k: int, order: int) -> LaurentSeries:
    if order < k:
        raise InvalidTruncation(f"truncation order {order} below exponent {k}")
    return LaurentSeries._normal(k, [exact(c)] + [0] * (order - k), order)


def add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    order = min(a.order, b.order)
    lo = min(a.min_exp, b.min_exp)
    if order < lo:
        return zero(order)
    cs = [0] * (order - lo + 1)
    for src in (a, b):
        off = src.min_exp - lo
        for i, c in enumerate(src.coeffs[:order - src.min_exp + 1]):
            cs[off + i] += c
    return LaurentSeries._normal(lo, [exact(c) for c in cs], order)


def sub(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return add(a, scale(b, -1))


def scale(a: LaurentSeries, c) -> LaurentSeries:
    c = exact(c)
    return LaurentSeries._normal(a.min_exp, [exact(c * x) for x in a.coeffs], a.order)


def mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product; the result order never exceeds what both inputs pin down."""
    order = min(a.order + b.min_exp, b.order + a.min_exp)
    lo = a.min_exp + b.min_exp
    n = order - lo + 1
    if n <= 0:
        return zero(order)
    ac = a.coeffs[:n]
    bc = b.coeffs[:n]
    out = [0] * n
    for i, x in enumerate(ac):
        if not x:
            continue
        for j, y in enumerate(bc[:n - i]):
            if y:
                out[i + j] += x * y
    return LaurentSeries._normal(lo, [exact(c) for c in out], order)


def inverse(a: LaurentSeries) -> LaurentSeries:
    if a.is_zero():
        raise NonInvertible("zero series has no inverse")
    lead = a.coeffs[0]
    v = a.min_exp
    n = a.order - v + 1         # relative precision
    inv_lead = exact(Fraction(1) / Fraction(lead))
    ac = a.coeffs
    out = [0] * n
    out[0] = inv_lead
    for k in range(1, n):
        s = 0
        for j in range(1, k + 1):
            x = ac[j]
            if x:
                s += x * out[k - j]
        out[k] = exact(-s * inv_lead)
    return LaurentSeries._normal(-v, out, -v + n - 1)


def compose_power(a: LaurentSeries, k: int) -> LaurentSeries:
    """Substitute q -> q^k."""
    if k < 1:
        raise ValueError("substitution power must be positive")
    order = k * a.order + (k - 1)
    cs = [0] * (order - k * a.min_exp + 1)
    for i, c in enumerate(a.coeffs):
        cs[k * i] = c
    return LaurentSeries._normal(k * a.min_exp, cs, order)


def extract_progression(a: LaurentSeries, r: int, m: int) -> LaurentSeries:
    """Sum of coeff(m*n + r) q^n over stored exponents congruent to r mod m."""
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m, got r={r}, m={m}")
    order = (a.order - r) // m
    lo = -((r - a.min_exp) // m)    # ceil((min_exp - r) / m)
    if order < lo:
        return zero(order)
    cs = [a.coeffs[m * n + r - a.min_exp] for n in range(lo, order + 1)]
    return LaurentSeries._normal(lo, cs, order)


def coefficient(a: LaurentSeries, k: int) -> Fraction:
    return a.coefficient(k)


def equal_to_order(a: LaurentSeries, b: LaurentSeries,
                   N: int) -> tuple[bool, Discrepancy | None]:
    """Compare every exponent <= N; report the smallest one that differs."""
    if N > min(a.order, b.order):
        raise InsufficientPrecision(
            f"comparison to q^{N} needs both series known that far "
            f"(orders {a.order}, {b.order})")
    lo = min(a.min_exp, b.min_exp)
    if N < lo:
        return True, None
    for e, x, y in zip(range(lo, N + 1), a.dense(lo, N), b.dense(lo, N)):
        if x != y:
            return False, Discrepancy(e, Fraction(x), Fraction(y))
    return True, None


def polynomial(coeffs: Sequence, order: int) -> LaurentSeries:
    """Exactly known polynomial sum coeffs[i] q^i, truncated at ``order``."""
    return LaurentSeries.from_coeffs(coeffs, 0, order)
