"""Assemble both sides of each identity about the M2 rank difference
d(n) = N2(0,6,n) + N2(1,6,n) - N2(2,6,n) - N2(3,6,n) and compare them, to a
finite order, against each other and against the partition oracle.

Where a statement has a sum form and a product form, the two sides are built
from different code paths (theta sums vs Pochhammer products) so a bug in one
cannot confirm itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import partitions as P
from .qseries import (
    LambertSpec, chi_spec, eval_product, j2_spec, j_spec, lambert_sum,
    phi, phi_product, phi_spec, poch, psi, psi_spec, psi_sum, theta_f,
)
from .report import (
    CheckReport, Status, conjecture_status, theorem_status, timed,
)
from .series import (
    Discrepancy, LaurentSeries, equal_to_order, extract_progression, inverse,
)


class AssemblyError(RuntimeError):
    """An assembled series violated a structural guarantee; signals a bug."""


# the two bilateral sums in the mod-36 generating function, and the mod-12 one
LAMBERT_MAO_1 = LambertSpec(A=18, B=9, C=0, D=18, E=3, denom_sign=-1)
LAMBERT_MAO_2 = LambertSpec(A=18, B=9, C=-1, D=18, E=0, denom_sign=1)
LAMBERT_PROP = LambertSpec(A=6, B=3, C=0, D=6, E=0, denom_sign=1)

# J_{6,36}^2 J_{18,36} J_{36}^3 / (J_{3,36}^2 J_{15,36}^2), and its J_{6,36} J_{18,36}^2 twin
_MAO_Q1 = (j2_spec(6, 36) ** 2 * j2_spec(18, 36) * j_spec(36) ** 3
           / (j2_spec(3, 36) ** 2 * j2_spec(15, 36) ** 2))
_MAO_Q2 = (j2_spec(6, 36) * j2_spec(18, 36) ** 2 * j_spec(36) ** 3
           / (j2_spec(3, 36) ** 2 * j2_spec(15, 36) ** 2))
# J_{2,12} J_{6,12}^2 J_{12}^3 / (J_{1,12}^2 J_{5,12}^2)
LEMMA_QUOTIENT = (j2_spec(2, 12) * j2_spec(6, 12) ** 2 * j_spec(12) ** 3
                  / (j2_spec(1, 12) ** 2 * j2_spec(5, 12) ** 2))


def _require_integral(s: LaurentSeries, what: str):
    for e, c in s.items():
        if c.denominator != 1:
            raise AssemblyError(f"{what}: non-integer coefficient {c} at q^{e}")


def mao_gf_terms(order: int, j936: LaurentSeries | None = None) -> list[LaurentSeries]:
    """The four summands of the generating function for d(n).

    ``j936`` substitutes the J_{9,36} series (known to order + 1); it exists
    so mutation tests can perturb one factor.
    """
    if j936 is None:
        j936 = eval_product(j2_spec(9, 36), order + 1)
    inv9 = inverse(j936)
    t1 = inv9 * lambert_sum(LAMBERT_MAO_1, order)
    t2 = (eval_product(_MAO_Q1, order) * inv9).shift(1)
    t3 = (eval_product(_MAO_Q2, order + 1) * inv9).shift(-1) * Fraction(1, 2)
    t4 = -(inv9 * lambert_sum(LAMBERT_MAO_2, order))
    return [t1, t2, t3, t4]


def mao_gf_rhs(order: int, j936: LaurentSeries | None = None,
               check: bool = True) -> LaurentSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    t1, t2, t3, t4 = mao_gf_terms(order, j936)
    total = (t1 + t2 + t3 + t4).truncate(order)
    if check:
        if total.coefficient(-1) != 0:
            raise AssemblyError(f"q^-1 terms do not cancel: {total.coefficient(-1)}")
        _require_integral(total, "mao_gf_rhs")
    return total


def gfprop_parenthesized(order: int) -> LaurentSeries:
    """J_{2,12}J_{6,12}^2J_{12}^3 / (2 J_{1,12}^2 J_{5,12}^2) minus the mod-12 Lambert sum."""
    return eval_product(LEMMA_QUOTIENT, order) * Fraction(1, 2) - lambert_sum(LAMBERT_PROP, order)


def gfprop_rhs(order: int) -> LaurentSeries:
    """The closed form for sum d(3n+2) q^n."""
    inner = gfprop_parenthesized(order + 1)
    if inner.coefficient(0) != 0:
        raise AssemblyError(f"constant term inside parentheses is {inner.coefficient(0)}")
    _require_integral(inner, "parenthesized expression")
    rhs = inner.shift(-1) * eval_product(j2_spec(3, 12) ** -1, order)
    return rhs.truncate(order)


def check_maogf(order: int = 100, rhs: LaurentSeries | None = None) -> CheckReport:
    """Generating function for d(n) against the partition oracle."""
    with timed() as t:
        if rhs is None:
            rhs = mao_gf_rhs(order)
        oracle = P.d_series(order)
        ok, disc = equal_to_order(rhs, oracle, order)
    return CheckReport("maogf", order, theorem_status(ok), disc, runtime_ms=t[0],
                       details={"oracle": "m2 rank table, N2(s,6,n)"})


def check_gfprop(order: int = 80) -> CheckReport:
    with timed() as t:
        rhs = gfprop_rhs(order)
        big = 3 * order + 2
        via_oracle = extract_progression(P.d_series(big), 2, 3)
        via_mao = extract_progression(mao_gf_rhs(big), 2, 3)
        results = {}
        first = None
        for name, other in (("oracle", via_oracle), ("mao_dissection", via_mao)):
            ok, disc = equal_to_order(rhs, other, order)
            results[name] = ok
            if not ok and first is None:
                first = disc
        constant = gfprop_parenthesized(0).coefficient(0)
    return CheckReport("gfprop", order, theorem_status(first is None), first,
                       runtime_ms=t[0],
                       details={"agrees_with": results, "parenthesized_constant_term": constant})


def check_phiid(order: int = 500) -> CheckReport:
    with timed() as t:
        lhs = eval_product(LEMMA_QUOTIENT, order)
        rhs = (phi(1, 1, order) ** 2 + phi(1, 3, order) ** 2) * Fraction(1, 2)
        middle = eval_product(phi_spec(-1, 6) ** 2 * poch(-1, 1, 6) * poch(-1, 5, 6)
                              / (poch(1, 1, 6) * poch(1, 5, 6)), order)
        ok, disc = equal_to_order(lhs, rhs, order)
        mid_ok, mid_disc = equal_to_order(lhs, middle, order)
    if ok and not mid_ok:
        ok, disc = False, mid_disc
    return CheckReport("phiid", order, theorem_status(ok), disc, runtime_ms=t[0],
                       details={"intermediate_form_agrees": mid_ok})


def sum_of_two_squares(order: int) -> LaurentSeries:
    """phi(q)^2, whose q^n coefficient counts signed pairs with a^2 + b^2 = n."""
    return phi(1, 1, order) ** 2


def phi2_sum(order: int) -> LaurentSeries:
    """phi^2(q) + phi^2(q^3) from theta sums."""
    return phi(1, 1, order) ** 2 + phi(1, 3, order) ** 2


def check_baruah_barman(order: int = 500) -> CheckReport:
    with timed() as t:
        lhs = phi2_sum(order)
        rhs = 2 * eval_product(phi_spec(-1, 6) ** 2 * chi_spec(1, 1) * psi_spec(-1, 3)
                               / (chi_spec(-1, 1) * psi_spec(1, 3)), order)
        ok, disc = equal_to_order(lhs, rhs, order)
        # substituted factors against their theta-sum definitions
        factor_discs = {
            "psi(-q^3)": equal_to_order(psi(-1, 3, order), psi_sum(-1, 3, order), order)[1],
            "phi(-q^6)": equal_to_order(phi_product(-1, 6, order),
                                        theta_f(-1, 6, -1, 6, order), order)[1],
        }
    subs = {name: d is None for name, d in factor_discs.items()}
    if ok and not all(subs.values()):
        ok, disc = False, next(d for d in factor_discs.values() if d is not None)
    return CheckReport("baruah-barman", order, theorem_status(ok), disc, runtime_ms=t[0],
                       details={"factor_checks": subs})


def phi2_ratio(order: int) -> LaurentSeries:
    """(phi^2(q) + phi^2(q^3)) / J_{3,12}."""
    return phi2_sum(order) * eval_product(j2_spec(3, 12) ** -1, order)


def _first_below(s: LaurentSeries, exps, bound: int):
    for e in exps:
        c = s.coefficient(e)
        if c < bound:
            return Discrepancy(e, c, Fraction(bound))
    return None


def check_main_theorem(order: int = 500, oracle_max: int = 100) -> CheckReport:
    """d(9n+2) > 0 and d(9n+5) > 0, plus the positivity step behind it."""
    with timed() as t:
        targets = [j for j in range(order + 1) if j % 9 in (2, 5)]
        gf = mao_gf_rhs(order)
        fail_gf = _first_below(gf, targets, 1)

        omax = min(order, oracle_max)
        oracle = P.d_series(omax)
        fail_oracle = _first_below(oracle, [j for j in targets if j <= omax], 1)

        ratio = phi2_ratio(order)
        fail_ratio = _first_below(ratio, range(order + 1), 1)

        # the proof's split: J_{3,12} = (1 - q^3) (q^15, q^9, q^12; q^12)_inf
        numer = phi2_sum(order)
        geometric = eval_product(poch(1, 3, 12, n=1) ** -1, order)
        rest_spec = poch(1, 15, 12) * poch(1, 9, 12) * poch(1, 12, 12)
        rest_inv = eval_product(rest_spec ** -1, order)
        split_disc = (
            equal_to_order(numer, LaurentSeries.from_coeffs([2, 4, 4], 0, 2), 2)[1]
            or _first_below(numer, range(order + 1), 0)
            or _first_below(rest_inv, range(order + 1), 0)
            or equal_to_order(numer * geometric * rest_inv, ratio, order)[1]
        )
        # the denominator as printed, (1 - q^3)(q^9, q^9, q^12; q^12), is not J_{3,12}
        printed = eval_product(poch(1, 3, 12, n=1) * poch(1, 9, 12) ** 2 * poch(1, 12, 12),
                               order)
        printed_matches = equal_to_order(printed, eval_product(j2_spec(3, 12), order),
                                         order)[0]

        # for 3 does not divide n+1, d(3n+2) is exactly [q^(n+1)] of ratio / 4
        mismatch = None
        for n in range((order - 2) // 3 + 1):
            if (n + 1) % 3 and n + 1 <= order:
                if 4 * gf.coefficient(3 * n + 2) != ratio.coefficient(n + 1):
                    mismatch = Discrepancy(3 * n + 2, gf.coefficient(3 * n + 2),
                                           ratio.coefficient(n + 1) / 4)
                    break

    disc = fail_gf or fail_oracle or fail_ratio or mismatch or split_disc
    details = {
        "gf_positive": fail_gf is None,
        "oracle_positive": fail_oracle is None,
        "oracle_max": omax,
        "ratio_positive": fail_ratio is None,
        "ratio_min_coefficient": min(ratio.coeffs),
        "three_factor_split": split_disc is None,
        "printed_denominator_equals_J_3_12": printed_matches,
        "dissection_matches_ratio": mismatch is None,
        "indices_checked": len(targets),
    }
    return CheckReport("main-theorem", order, theorem_status(disc is None), disc,
                       runtime_ms=t[0], details=details)


@dataclass(frozen=True)
class Inequality:
    flavor: str
    modulus: int
    step: int           # arguments step*n + offset
    offset: int
    left: tuple[int, int]
    right: tuple[int, int]
    strict: bool
    n_min: int

    def describe(self) -> str:
        N = "N" if self.flavor == "dyson" else "N2"
        arg = f"{self.step}n+{self.offset}" if self.offset else f"{self.step}n"
        term = lambda s: f"{N}({s},{self.modulus},{arg})"  # noqa: E731
        rel = ">" if self.strict else ">="
        return (f"{term(self.left[0])} + {term(self.left[1])} {rel} "
                f"{term(self.right[0])} + {term(self.right[1])}, n >= {self.n_min}")


CONJECTURES = {
    1: Inequality("dyson", 10, 5, 0, (0, 1), (4, 5), True, 0),
    2: Inequality("dyson", 10, 5, 0, (1, 2), (3, 4), False, 1),
    3: Inequality("m2", 10, 5, 0, (0, 1), (4, 5), True, 0),
    4: Inequality("m2", 10, 5, 4, (0, 1), (4, 5), True, 0),
    5: Inequality("m2", 10, 5, 0, (1, 2), (3, 4), True, 1),
    6: Inequality("m2", 10, 5, 2, (1, 2), (3, 4), True, 1),
    7: Inequality("m2", 6, 3, 2, (0, 1), (2, 3), True, 0),
}


def conjecture_scan(cid: int, max_n: int = 60, method: str = "auto") -> CheckReport:
    """Scan one displayed inequality over arguments step*n + offset <= max_n."""
    if cid not in CONJECTURES:
        raise ValueError(f"conjecture id must be in 1..7, got {cid}")
    ineq = CONJECTURES[cid]
    with timed() as t:
        table = P.rank_table(ineq.flavor, ineq.modulus, max_n, method)
        bad, margins = [], []
        n = ineq.n_min
        while ineq.step * n + ineq.offset <= max_n:
            arg = ineq.step * n + ineq.offset
            margin = (sum(table(s, arg) for s in ineq.left)
                      - sum(table(s, arg) for s in ineq.right))
            margins.append(margin)
            if margin < 0 or (ineq.strict and margin == 0):
                bad.append(n)
            n += 1
    return CheckReport(f"conjecture-{cid}", max_n, conjecture_status(not bad),
                       witnesses=bad or None, runtime_ms=t[0],
                       details={"statement": ineq.describe(), "arguments_checked": len(margins),
                                "min_margin": min(margins) if margins else None})


def negative_coefficient_scan(order: int = 200) -> CheckReport:
    """Negative coefficients of the parenthesized mod-12 expression."""
    with timed() as t:
        inner = gfprop_parenthesized(order)
        negative = [e for e, c in inner.items() if c < 0]
    return CheckReport("conclusion-negative-coefficients", order,
                       conjecture_status(bool(negative)), witnesses=negative,
                       runtime_ms=t[0], details={"count": len(negative)})


def nonnegativity_scan(order: int = 300) -> CheckReport:
    """Non-negativity of the parenthesized expression divided by 1 - q^12."""
    with timed() as t:
        inner = gfprop_parenthesized(order)
        s = inner * eval_product(poch(1, 12, 1, n=1) ** -1, order)
        negative = [e for e, c in s.items() if c < 0]
    return CheckReport("conclusion-nonnegativity", order, conjecture_status(not negative),
                       witnesses=negative or None, runtime_ms=t[0],
                       details={"constant_term": s.coefficient(0)})


def conclusion_checks(order: int = 300) -> list[CheckReport]:
    return [negative_coefficient_scan(order), nonnegativity_scan(order)]


MOD7_VARIANTS = {
    # label: (rank residue class offset, partition-count offset)
    "N(t,7,7n+4) = p(7n+6)/7 (as printed)": (4, 6),
    "N(t,7,7n+4) = p(7n+4)/7": (4, 4),
    "N(t,7,7n+6) = p(7n+6)/7": (6, 6),
    "N(t,7,7n+5) = p(7n+5)/7": (5, 5),
}


def _equidistributed(table: P.RankTable, m: int, r: int, pr: int, pc: list[int],
                     max_k: int) -> int | None:
    """First k where N(s,m,mk+r) != p(mk+pr)/m for some s, else None."""
    for k in range(max_k + 1):
        target = pc[m * k + pr]
        if any(m * table(s, m * k + r) != target for s in range(m)):
            return k
    return None


def check_dyson_equidistribution(max_k: int = 10) -> list[CheckReport]:
    reports = []
    with timed() as t:
        top = 7 * max_k + 6
        pc = P.partition_counts(top)
        t5 = P.rank_table("dyson", 5, 5 * max_k + 4)
        k5 = _equidistributed(t5, 5, 4, 4, pc, max_k)
    disc = None
    if k5 is not None:
        n = 5 * k5 + 4
        worst = next(s for s in range(5) if 5 * t5(s, n) != pc[n])
        disc = Discrepancy(n, Fraction(t5(worst, n)), Fraction(pc[n], 5))
    reports.append(CheckReport("dyson-mod5", max_k, theorem_status(k5 is None), disc,
                               runtime_ms=t[0],
                               details={"statement": "N(s,5,5k+4) = p(5k+4)/5"}))
    with timed() as t:
        t7 = P.rank_table("dyson", 7, top)
        variants = {label: _equidistributed(t7, 7, r, pr, pc, max_k) is None
                    for label, (r, pr) in MOD7_VARIANTS.items()}
    holding = [label for label, ok in variants.items() if ok]
    disc = None
    if not holding:
        k = _equidistributed(t7, 7, 5, 5, pc, max_k)
        n = 7 * k + 5
        worst = next(s for s in range(7) if 7 * t7(s, n) != pc[n])
        disc = Discrepancy(n, Fraction(t7(worst, n)), Fraction(pc[n], 7))
    reports.append(CheckReport("dyson-mod7", max_k, theorem_status(bool(holding)), disc,
                               runtime_ms=t[0],
                               details={"variants": variants, "holding_variants": holding}))
    return reports


RAMANUJAN = ((5, 4), (7, 5), (11, 6))


def check_ramanujan(max_n: int = 100) -> CheckReport:
    """p(5k+4), p(7k+5), p(11k+6) divisible by 5, 7, 11 for arguments <= max_n."""
    with timed() as t:
        pc = P.partition_counts(max_n)
        # independent route: coefficients of 1/(q;q)_inf
        gen = eval_product(j_spec(1) ** -1, max_n)
        route_disc = equal_to_order(LaurentSeries.from_coeffs(pc, 0, max_n), gen, max_n)[1]
        disc = route_disc
        checked = 0
        for m, r in RAMANUJAN:
            for n in range(r, max_n + 1, m):
                checked += 1
                if disc is None and pc[n] % m:
                    disc = Discrepancy(n, Fraction(pc[n] % m), Fraction(0))
    return CheckReport("ramanujan-congruences", max_n, theorem_status(disc is None), disc,
                       runtime_ms=t[0],
                       details={"arguments_checked": checked,
                                "counts_match_product": route_disc is None})


def all_reports_ok(reports: list[CheckReport]) -> bool:
    return all(r.status in (Status.PASS, Status.HOLDS) for r in reports)
