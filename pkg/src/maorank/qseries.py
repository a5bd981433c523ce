"""Named q-objects as truncated series: Pochhammer products, J-notation,
Ramanujan theta functions and bilateral Lambert sums.

Every Pochhammer argument here is a signed monomial ``sign*q^a``, so a factor
``(sign*q^a; q^b)_n`` is a product of binomials ``1 - sign*q^(a+i*b)``.
Products are expanded one binomial at a time in O(order) each, which keeps
order-1500 J-quotients cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _grid

from .report import CheckReport, theorem_status, timed
from .series import LaurentSeries, equal_to_order, zero

INF = math.inf


class DegenerateFactor(ValueError):
    pass


class DegenerateTerm(ValueError):
    pass


class DivergentSpec(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    """``(sign*q^a; q^b)_n`` raised to ``exponent``."""

    sign: int
    a: int
    b: int
    n: int | float = INF
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.a < 0 or self.b < 1:
            raise ValueError(f"need a >= 0 and b >= 1, got a={self.a}, b={self.b}")
        if not (self.n == INF or (isinstance(self.n, int) and self.n >= 0)):
            raise ValueError(f"length must be a non-negative int or INF, got {self.n}")
        if self.exponent == 0:
            raise ValueError("factor exponent must be nonzero")


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[Factor, ...] = ()

    def __mul__(self, other: ProductSpec) -> ProductSpec:
        return ProductSpec(self.factors + other.factors)

    def __pow__(self, k: int) -> ProductSpec:
        if k == 0:
            return ProductSpec()
        return ProductSpec(tuple(
            Factor(f.sign, f.a, f.b, f.n, f.exponent * k) for f in self.factors))

    def __truediv__(self, other: ProductSpec) -> ProductSpec:
        return self * other ** -1


def poch(sign: int, a: int, b: int, n: int | float = INF) -> ProductSpec:
    return ProductSpec((Factor(sign, a, b, n),))


def j_spec(b: int) -> ProductSpec:
    return poch(1, b, b)


def j2_spec(a: int, b: int) -> ProductSpec:
    if not 0 < a < b:
        raise ValueError(f"J_(a,b) needs 0 < a < b, got a={a}, b={b}")
    return poch(1, a, b) * poch(1, b - a, b) * poch(1, b, b)


def eval_product(spec: ProductSpec, order: int) -> LaurentSeries:
    if order < 0:
        raise ValueError("product expansion needs order >= 0")
    cs: list = [1] + [0] * order
    for f in spec.factors:
        i = 0
        while i < f.n:
            k = f.a + i * f.b
            if k > order:
                break
            s = f.sign
            if k == 0:
                c = 1 - s
                if c == 0:
                    if f.exponent < 0:
                        raise DegenerateFactor(
                            f"dividing by (1 - q^0) in {f}")
                    return zero(order)
                c = Fraction(c) ** f.exponent
                cs = [x * c for x in cs]
            elif f.exponent > 0:
                for _ in range(f.exponent):
                    for j in range(order, k - 1, -1):
                        cs[j] -= s * cs[j - k]
            else:
                for _ in range(-f.exponent):
                    for j in range(k, order + 1):
                        cs[j] += s * cs[j - k]
            i += 1
    return LaurentSeries.from_coeffs(cs, 0, order)


def J(b: int, order: int) -> LaurentSeries:
    return eval_product(j_spec(b), order)


def J2(a: int, b: int, order: int) -> LaurentSeries:
    return eval_product(j2_spec(a, b), order)


def theta_f(s1: int, k1: int, s2: int, k2: int, order: int) -> LaurentSeries:
    """Ramanujan f(a, b) at a = s1*q^k1, b = s2*q^k2, summed directly."""
    if k1 < 0 or k2 < 0:
        raise ValueError("theta exponents must be non-negative")
    if k1 + k2 < 1:
        raise DivergentSpec("f(a, b) needs |ab| < 1, i.e. k1 + k2 >= 1")
    cs: list = [0] * (order + 1)
    # exponent is convex in n with its minimum at n in {0, 1}: walk both ways
    for step in (1, -1):
        n = 0 if step == 1 else -1
        while True:
            t1 = n * (n + 1) // 2
            t2 = n * (n - 1) // 2
            e = k1 * t1 + k2 * t2
            if e > order:
                break
            cs[e] += s1 ** (t1 % 2) * s2 ** (t2 % 2)
            n += step
    return LaurentSeries.from_coeffs(cs, 0, order)


def theta_product(s1: int, k1: int, s2: int, k2: int, order: int) -> LaurentSeries:
    """Triple-product side (-a, -b, ab; ab)_inf of f(a, b)."""
    k = k1 + k2
    if s1 == s2:
        spec = poch(-s1, k1, k) * poch(-s2, k2, k) * poch(1, k, k)
    else:
        # base ab = -q^k is negative: (x; y)_inf = (x; y^2)_inf (xy; y^2)_inf
        spec = (poch(-s1, k1, 2 * k) * poch(-s2, k1 + k, 2 * k)
                * poch(-s2, k2, 2 * k) * poch(-s1, k2 + k, 2 * k)
                * poch(-1, k, 2 * k) * poch(1, 2 * k, 2 * k))
    return eval_product(spec, order)


def phi_spec(sign: int, k: int) -> ProductSpec:
    """Product form (-x, -x, x^2; x^2)_inf of phi(x), x = sign*q^k."""
    _check_arg(k)
    return poch(-sign, k, 2 * k) ** 2 * poch(1, 2 * k, 2 * k)


def psi_spec(sign: int, k: int) -> ProductSpec:
    """(x^2; x^2)_inf / (x; x^2)_inf, the product form of psi(x)."""
    _check_arg(k)
    return poch(1, 2 * k, 2 * k) / poch(sign, k, 2 * k)


def chi_spec(sign: int, k: int) -> ProductSpec:
    """chi(x) = (-x; x^2)_inf."""
    _check_arg(k)
    return poch(-sign, k, 2 * k)


def phi(sign: int, k: int, order: int) -> LaurentSeries:
    """phi(x) = f(x, x) at x = sign*q^k, as the sum of x^(n^2)."""
    _check_arg(k)
    return theta_f(sign, k, sign, k, order)


def phi_product(sign: int, k: int, order: int) -> LaurentSeries:
    return eval_product(phi_spec(sign, k), order)


def psi(sign: int, k: int, order: int) -> LaurentSeries:
    return eval_product(psi_spec(sign, k), order)


def psi_sum(sign: int, k: int, order: int) -> LaurentSeries:
    """psi(x) = f(x, x^3) summed directly."""
    _check_arg(k)
    return theta_f(sign, k, sign, 3 * k, order)


def chi(sign: int, k: int, order: int) -> LaurentSeries:
    return eval_product(chi_spec(sign, k), order)


def _check_arg(k: int):
    if k < 1:
        raise ValueError(f"theta argument exponent must be >= 1, got {k}")


@dataclass(frozen=True)
class LambertSpec:
    """sum_n [(-1)^n] q^(A n^2 + B n + C) / (1 + denom_sign * q^(D n + E))."""

    A: int
    B: int
    C: int
    D: int
    E: int
    denom_sign: int = 1
    alternating: bool = True

    def __post_init__(self):
        if self.A <= 0:
            raise ValueError("Lambert sum needs A > 0 to converge formally")
        if self.denom_sign not in (1, -1):
            raise ValueError("denom_sign must be +1 or -1")
        if self.denom_sign == -1:
            if (self.D == 0 and self.E == 0) or (self.D != 0 and self.E % self.D == 0):
                raise DegenerateTerm(
                    f"1 - q^({self.D}n + {self.E}) vanishes for some integer n")


def _lambert_terms(spec: LambertSpec, order: int, extra_terms: int):
    threshold = (abs(spec.B) + abs(spec.D)) / (2 * spec.A) + 1
    for step in (1, -1):
        n = 0 if step == 1 else -1
        extra = extra_terms
        while True:
            e = spec.A * n * n + spec.B * n + spec.C
            m = spec.D * n + spec.E
            sign = (-1) ** (n % 2) if spec.alternating else 1
            if m < 0:
                # 1/(1 + s q^m) = s q^-m / (1 + s q^-m)
                start, pref, M = e - m, spec.denom_sign, -m
            else:
                start, pref, M = e, 1, m
            if start > order and abs(n) > threshold:
                if extra <= 0:
                    break
                extra -= 1
            yield n, start, sign * pref, M
            n += step


def lambert_sum(spec: LambertSpec, order: int, extra_terms: int = 0) -> LaurentSeries:
    terms = list(_lambert_terms(spec, order, extra_terms))
    live = [t for t in terms if t[1] <= order]
    if not live:
        return zero(order)
    lo = min(t[1] for t in live)
    cs: list = [0] * (order - lo + 1)
    half = Fraction(1, 2)
    for n, start, c, M in live:
        if M == 0:
            if spec.denom_sign == -1:
                raise DegenerateTerm(f"term n={n} divides by 1 - q^0")
            cs[start - lo] += c * half
            continue
        r = -spec.denom_sign
        e, w = start, c
        while e <= order:
            cs[e - lo] += w
            e += M
            w *= r
    return LaurentSeries.from_coeffs(cs, lo, order)


# ---- elementary product identities ----------------------------------------

GRID_AB = range(1, 5)
GRID_C = ((1, 0), (-1, 0), (1, 1), (-1, 1))    # c = sign * q^shift
GRID_K = (2, 3, 4)


def _elementary_cases(order: int):
    yield ("oddunique", {}), poch(-1, 1, 1) * poch(1, 1, 2), ProductSpec()
    for a, b in _grid(GRID_AB, GRID_AB):
        yield (("squares", {"a": a, "b": b}),
               poch(1, a, b) * poch(-1, a, b), poch(1, 2 * a, 2 * b))
    for (s, t), a, b in _grid(GRID_C, GRID_AB, GRID_AB):
        yield (("bisection", {"c": [s, t], "a": a, "b": b}),
               poch(s, t + a, 2 * b) * poch(s, t + a + b, 2 * b), poch(s, t + a, b))
    for k, (s, t), a, b in _grid(GRID_K, GRID_C, GRID_AB, GRID_AB):
        lhs = ProductSpec()
        for j in range(k):
            lhs = lhs * poch(s, t + a + j * b, k * b)
        yield (("ksection", {"k": k, "c": [s, t], "a": a, "b": b}),
               lhs, poch(s, t + a, b))


def check_elementary_identities(order: int = 100) -> CheckReport:
    """The four elementary product identities over a finite parameter grid."""
    if order < 1:
        raise ValueError("order must be >= 1")
    counts: dict[str, int] = {}
    failure = None
    with timed() as t:
        for (name, params), lhs, rhs in _elementary_cases(order):
            ok, disc = equal_to_order(eval_product(lhs, order),
                                      eval_product(rhs, order), order)
            counts[name] = counts.get(name, 0) + 1
            if not ok:
                failure = (name, params, disc)
                break
    details = {
        "grid": {"a": list(GRID_AB), "b": list(GRID_AB),
                 "c": [list(c) for c in GRID_C], "k": list(GRID_K)},
        "cases_checked": counts,
    }
    if failure:
        details["failing_case"] = {"identity": failure[0], **failure[1]}
    return CheckReport("elementary-identities", order, theorem_status(failure is None),
                       first_discrepancy=failure[2] if failure else None,
                       runtime_ms=t[0], details=details)


JTP_SPECIALIZATIONS = {
    "phi": (1, 1, 1, 1),
    "psi": (1, 1, 1, 3),
    "phi(-q^3)": (-1, 3, -1, 3),
}


def check_jacobi_triple_product(order: int = 200) -> CheckReport:
    failure = None
    with timed() as t:
        for name, (s1, k1, s2, k2) in JTP_SPECIALIZATIONS.items():
            ok, disc = equal_to_order(theta_f(s1, k1, s2, k2, order),
                                      theta_product(s1, k1, s2, k2, order), order)
            if not ok:
                failure = (name, disc)
                break
    details = {"specializations": list(JTP_SPECIALIZATIONS)}
    if failure:
        details["failing_case"] = failure[0]
    return CheckReport("jacobi-triple-product", order, theorem_status(failure is None),
                       first_discrepancy=failure[1] if failure else None,
                       runtime_ms=t[0], details=details)

