"""Acceptance checks, runnable from the CLI (``shiftdim verify``) and pytest.

Each check returns a :class:`CheckResult`. ``level="quick"`` uses the
acceptance bounds; ``level="full"`` widens the exhaustive ranges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Callable

from .characters import (
    Root2Value,
    ThomaPoint,
    branching_check,
    char_value,
    convergence_table,
    multiplicativity_check,
    psi,
)
from .dimensions import f_closed, f_skew, g_closed, g_skew, remark17_identity_check
from .partitions import (
    contains,
    odd_partitions_of,
    ordinary_skew_shape,
    partitions_upto,
    shifted_skew_shape,
    strict_partitions_of,
    strict_partitions_upto,
)
from .polynomials import (
    capital_H,
    eval_P,
    eval_Pstar,
    expand_in_monomials,
    power_sum_eval,
    supersymmetry_test,
    symmetrize_Rtilde,
)
from .tableaux import count_ordinary_standard_tableaux, count_shifted_standard_tableaux

SEED = 20240917
CONVERGENCE_GAMMA = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
CONVERGENCE_THRESHOLD = Decimal("0.05")
THOMA_GRID = (
    ThomaPoint((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))),
    ThomaPoint((Fraction(1),)),
    ThomaPoint(()),
    ThomaPoint((Fraction(1, 2), Fraction(1, 2))),
    ThomaPoint((Fraction(3, 5), Fraction(1, 5), Fraction(1, 10))),
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name} ({self.checked} cases)"
        if self.failures:
            text += f"; first failures: {self.failures[:3]}"
        return text


def _result(name: str, cases) -> CheckResult:
    checked, failures = 0, []
    for label, ok in cases:
        checked += 1
        if not ok:
            failures.append(label)
    return CheckResult(name, not failures and checked > 0, checked, failures)


def _bounds(level: str, quick: int, full: int) -> int:
    return quick if level == "quick" else full


def check_dimension_theorem(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 10, 12)

    def cases():
        for lam in strict_partitions_upto(bound):
            for mu in strict_partitions_upto(sum(lam)):
                if contains(mu, lam):
                    count = count_shifted_standard_tableaux(shifted_skew_shape(lam, mu))
                    yield (tuple(lam), tuple(mu)), g_skew(lam, mu) == count

    return _result(f"1 skew shifted dimension formula vs backtracking, |lam|<={bound}", cases())


def check_vanishing(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 8, 9)
    h_bound = _bounds(level, 10, 12)

    def cases():
        pool = list(strict_partitions_upto(bound))
        for mu in pool:
            for lam in pool:
                if not contains(mu, lam):
                    yield ("vanish", tuple(mu), tuple(lam)), eval_Pstar(mu, lam, shortcut=False) == 0
        for mu in strict_partitions_upto(h_bound):
            yield ("H", tuple(mu)), eval_Pstar(mu, mu, shortcut=False) == capital_H(mu)

    return _result(f"2 vanishing P*_mu(lam)=0 (|.|<={bound}) and P*_mu(mu)=H(mu) (|mu|<={h_bound})", cases())


def check_highest_term(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 6, 6)

    def cases():
        for lam in strict_partitions_upto(bound):
            k = sum(lam)
            if not k:
                continue
            star = expand_in_monomials("Pstar", lam, k)
            plain = expand_in_monomials("P", lam, k)
            ok = star.get(k) == plain.get(k) and max(star) == k and all(d <= k for d in star)
            yield tuple(lam), ok

    return _result(f"3 top degree of P* equals P, lower terms of smaller degree, |lam|<={bound}", cases())


def _random_r(rng: random.Random, l: int, max_exp: int = 2) -> dict:
    r = {}
    for _ in range(rng.randint(1, 3)):
        e = tuple(rng.randint(0, max_exp) for _ in range(l))
        r[e] = r.get(e, 0) + Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5))
    return {e: c for e, c in r.items() if c}


def _swap_symmetrize(r: dict) -> dict:
    out: dict = {}
    for e, c in r.items():
        for key in (e, (e[1], e[0]) + e[2:]):
            out[key] = out.get(key, 0) + c
    return {e: c for e, c in out.items() if c}


def _restrict_graded(graded: dict, n: int) -> dict:
    out = {}
    for d, poly in graded.items():
        part = poly.restrict(n)
        if not part.is_zero():
            out[d] = part
    return out


def check_symmetrization_properties(level: str = "quick", trials: int = 10) -> CheckResult:
    rng = random.Random(SEED)

    def cases():
        for t in range(trials):
            l = rng.randint(1, 3)
            n = rng.randint(l, 5)
            r = _random_r(rng, l)
            deg_r = max(sum(e) for e in r)
            rt = symmetrize_Rtilde(r, l, n)
            yield ("a", t, l, n), all(d <= deg_r for d in rt)
            if n >= 2:
                yield ("b", t, l, n), supersymmetry_test(rt, trials=20, seed=SEED + t)

            lc = max(l, 2)
            nc = rng.randint(lc, 5)
            yield ("c", t, lc, nc), symmetrize_Rtilde(_swap_symmetrize(_random_r(rng, lc)), lc, nc) == {}

            nd = rng.randint(l, 4)
            rd = {tuple(x + 1 for x in e): c for e, c in _random_r(rng, l).items()}
            small = symmetrize_Rtilde(rd, l, nd)
            big = _restrict_graded(symmetrize_Rtilde(rd, l, nd + 1), nd)
            scaled = {d: p.scale(nd + 1 - l) for d, p in small.items()}
            yield ("d", t, l, nd), big == scaled

    return _result(f"4 symmetrization properties (a)-(d), {trials} random r, l<=3, n<=5", cases())


def check_remark17(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 10, 12)

    def cases():
        for lam in strict_partitions_upto(bound):
            for mu in strict_partitions_upto(sum(lam)):
                if contains(mu, lam) and len(lam) - len(mu) in (0, 1):
                    yield (tuple(lam), tuple(mu)), remark17_identity_check(lam, mu)

    return _result(f"5 shifted/ordinary identity for |lam|<={bound}", cases())


def check_f_formulas(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 10, 11)

    def cases():
        for eta in partitions_upto(bound):
            yield ("closed", tuple(eta)), f_closed(eta) == f_skew(eta, ())
            for nu in partitions_upto(sum(eta)):
                if contains(nu, eta):
                    count = count_ordinary_standard_tableaux(ordinary_skew_shape(eta, nu))
                    yield (tuple(eta), tuple(nu)), f_skew(eta, nu) == count

    return _result(f"6 ordinary skew dimension formula vs backtracking, |eta|<={bound}", cases())


def _random_distinct_point(rng: random.Random, n: int) -> list[Fraction]:
    pts: set = set()
    while len(pts) < n:
        pts.add(Fraction(rng.randint(-50, 50), rng.randint(1, 12)))
    return list(pts)


def check_stembridge(level: str = "quick", points: int = 20) -> CheckResult:
    bound = _bounds(level, 8, 10)
    rng = random.Random(SEED)

    def cases():
        for k in range(1, bound + 1):
            for rho in odd_partitions_of(k):
                for t in range(points):
                    x = _random_distinct_point(rng, rng.randint(1, 5))
                    lhs = Root2Value()
                    for mu in strict_partitions_of(k):
                        value = eval_P(mu, x)
                        if value:
                            lhs += Root2Value.sqrt2_power(len(mu) - k) * value * char_value(mu, rho)
                    rhs = Root2Value.sqrt2_power(len(rho) - k) * power_sum_eval(rho, x)
                    yield (tuple(rho), t), lhs == rhs

    return _result(f"7 power sum / P-function character identity, k<={bound}, {points} points", cases())


def check_character_sanity(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 8, 9)
    branch_bound = _bounds(level, 7, 8)

    def cases():
        for k in range(1, bound + 1):
            for mu in strict_partitions_of(k):
                ident = char_value(mu, (1,) * k)
                yield ("identity", tuple(mu)), ident == Root2Value.sqrt2_power(k - len(mu)) * g_closed(mu)
                for rho in odd_partitions_of(k):
                    v = char_value(mu, rho)
                    ok = v.b == 0 if (k - len(mu)) % 2 == 0 else v.a == 0
                    yield ("rationality", tuple(mu), tuple(rho)), ok
        for lam in strict_partitions_upto(branch_bound):
            for k in range(1, sum(lam) + 1):
                for rho in odd_partitions_of(k):
                    yield ("branching", tuple(lam), tuple(rho)), branching_check(lam, k, rho)

    return _result(f"8 identity normalization, rationality pattern (k<={bound}), branching (|lam|<={branch_bound})", cases())


def check_convergence(level: str = "quick") -> CheckResult:
    """Per odd rho with |rho| <= 5: error at n=48 below error at n=12, and
    error at n=96 below the frozen threshold.

    For rho = (1^k) both sides are identically 1, so the errors are exactly
    zero and the comparison is taken as equality at zero.
    """
    gamma = ThomaPoint(CONVERGENCE_GAMMA)

    def cases():
        for k in range(1, 6):
            for rho in odd_partitions_of(k):
                e12, e48, e96 = (row.abs_error for row in convergence_table(gamma, rho, [12, 48, 96]))
                if all(p == 1 for p in rho):
                    yield ("monotone", tuple(rho)), e12 == e48 == e96 == 0
                else:
                    yield ("monotone", tuple(rho)), e48 < e12
                yield ("threshold", tuple(rho)), e96 < CONVERGENCE_THRESHOLD

    return _result("9 convergence of normalized characters to psi_gamma, gamma=(1/2,1/3,1/6)", cases())


def check_multiplicativity(level: str = "quick") -> CheckResult:
    bound = _bounds(level, 12, 14)
    pool = list(partitions_upto(bound))

    def cases():
        for gamma in THOMA_GRID:
            for rho in pool:
                for sigma in pool:
                    if sum(rho) + sum(sigma) <= bound:
                        yield (gamma.gamma, tuple(rho), tuple(sigma)), multiplicativity_check(gamma, rho, sigma)
            for k in range(bound + 1):
                yield (gamma.gamma, "identity", k), psi(gamma, (1,) * k) == 1

    return _result(f"10 multiplicativity of psi_gamma, |rho|+|sigma|<={bound}, 5 Thoma points", cases())


CHECKS: list[Callable[[str], CheckResult]] = [
    check_dimension_theorem,
    check_vanishing,
    check_highest_term,
    check_symmetrization_properties,
    check_remark17,
    check_f_formulas,
    check_stembridge,
    check_character_sanity,
    check_convergence,
    check_multiplicativity,
]


def run_acceptance(level: str = "quick", echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    results = []
    for check in CHECKS:
        res = check(level)
        if echo:
            echo(res.line())
        results.append(res)
    return results
