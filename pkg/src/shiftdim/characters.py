"""Spin characters of the double covers S~(n) and their limits.

Character values χ^μ_*(t_ρ) are obtained from the expansion of odd power
sums in the Schur P basis,

    Σ_μ 2^{(l(μ)-k)/2} χ^μ_*(t_ρ) P_μ = 2^{(l(ρ)-k)/2} p_ρ,

so χ^μ_*(t_ρ) = 2^{(l(ρ)-l(μ))/2} c_μ where p_ρ = Σ c_μ P_μ. Values live in
Q(√2) and are kept exact as :class:`Root2Value`.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import (
    Partition,
    StrictPartition,
    format_partition,
    is_odd_partition,
    odd_partitions_of,
    partition_union,
    strict_partitions_of,
)
from .polynomials import as_rational, eval_Pstar, expand_in_monomials, falling_factorial, format_rational

MAX_CHARACTER_DEGREE = 12
DECIMAL_DIGITS = 50


class EvenPart(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class DegreeTooLarge(ValueError):
    pass


class InfeasibleRemainder(ValueError):
    pass


@dataclass(frozen=True)
class Root2Value:
    """a + b√2 with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @classmethod
    def coerce(cls, x) -> "Root2Value":
        return x if isinstance(x, Root2Value) else cls(as_rational(x))

    @classmethod
    def sqrt2_power(cls, m: int) -> "Root2Value":
        """2^{m/2} for any integer m."""
        if m % 2 == 0:
            return cls(Fraction(2) ** (m // 2))
        return cls(0, Fraction(2) ** ((m - 1) // 2))

    def __add__(self, other):
        other = Root2Value.coerce(other)
        return Root2Value(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Root2Value(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Root2Value.coerce(other))

    def __rsub__(self, other):
        return Root2Value.coerce(other) - self

    def __mul__(self, other):
        other = Root2Value.coerce(other)
        return Root2Value(self.a * other.a + 2 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Root2Value.coerce(other)
        norm = other.a * other.a - 2 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        return self * Root2Value(other.a / norm, -other.b / norm)

    def __eq__(self, other):
        try:
            other = Root2Value.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def to_decimal(self, digits: int = DECIMAL_DIGITS) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            num = lambda q: Decimal(q.numerator) / Decimal(q.denominator)  # noqa: E731
            return num(self.a) + num(self.b) * Decimal(2).sqrt()

    def __str__(self):
        if not self.b:
            return _fmt(self.a)
        if not self.a:
            return f"{_fmt(self.b)}*sqrt(2)"
        return f"{_fmt(self.a)} + {_fmt(self.b)}*sqrt(2)"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_odd(rho: Partition) -> None:
    if not is_odd_partition(rho):
        raise EvenPart(f"class {format_partition(rho)!r} has an even part")


@lru_cache(maxsize=None)
def _p_to_P(rho: tuple, max_degree: int) -> dict:
    k = sum(rho)
    if k > max_degree:
        raise DegreeTooLarge(f"|rho|={k} exceeds the configured bound {max_degree}")
    basis = strict_partitions_of(k)
    # the P_{mu|n} stay independent once n >= l(mu) for every strict mu |- k
    n = max((len(mu) for mu in basis), default=0) or 1
    target = expand_in_monomials("p", rho, n).get(k)
    target = dict(target.coeffs) if target else {}
    expansions = {}
    for mu in basis:
        e = expand_in_monomials("P", mu, n).get(k)
        expansions[mu] = dict(e.coeffs) if e else {}

    coeffs: dict = {}
    residual = dict(target)
    for kappa in basis:  # decreasing lex order refines dominance
        lead = expansions[kappa].get(kappa, Fraction(0))
        if lead != 1:
            raise ArithmeticError(f"P{tuple(kappa)} is not monic on m{tuple(kappa)}")
        c = residual.get(kappa, Fraction(0))
        if c:
            coeffs[kappa] = c
            for key, v in expansions[kappa].items():
                residual[key] = residual.get(key, Fraction(0)) - c * v
    if any(residual.values()):
        raise ArithmeticError(f"p{tuple(rho)} is not in the span of the P basis")
    return coeffs


def p_to_P_coefficients(rho: Iterable[int], max_degree: int = MAX_CHARACTER_DEGREE) -> dict:
    """Coefficients c_mu with p_rho = Σ c_mu P_mu over strict mu |- |rho|."""
    rho = Partition(rho)
    _check_odd(rho)
    return dict(_p_to_P(tuple(rho), max_degree))


def char_value(mu, rho) -> Root2Value:
    """χ^mu_*(t_rho) for strict mu and a class rho with odd parts."""
    mu, rho = StrictPartition(mu), Partition(rho)
    if sum(mu) != sum(rho):
        raise SizeMismatch(f"|mu|={sum(mu)} but |rho|={sum(rho)}")
    c = p_to_P_coefficients(rho).get(mu, Fraction(0))
    return Root2Value.sqrt2_power(len(rho) - len(mu)) * c


@dataclass(frozen=True)
class CharacterTable:
    k: int
    entries: dict

    def __getitem__(self, key) -> Root2Value:
        mu, rho = key
        return self.entries[(StrictPartition(mu), Partition(rho))]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "rows": [
                {
                    "mu": mu.serialize(),
                    "rho": rho.serialize(),
                    "a": format_rational(v.a),
                    "b": format_rational(v.b),
                }
                for (mu, rho), v in self.entries.items()
            ],
        }


def character_table(k: int) -> CharacterTable:
    entries = {}
    for mu in strict_partitions_of(k):
        for rho in odd_partitions_of(k):
            entries[(mu, rho)] = char_value(mu, rho)
    return CharacterTable(k, entries)


def restriction_coefficient(lam, mu) -> Root2Value:
    """<Res_k χ^lam_* / χ^lam_*(e), χ^mu_*>_k = 2^{(l(mu)-|mu|)/2} P*_mu(lam) / (|lam| falling |mu|)."""
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    if sum(mu) > sum(lam):
        raise SizeMismatch(f"|mu|={sum(mu)} exceeds |lam|={sum(lam)}")
    ratio = eval_Pstar(mu, lam) / falling_factorial(sum(lam), sum(mu))
    return Root2Value.sqrt2_power(len(mu) - sum(mu)) * ratio


def xi(lam, rho) -> Root2Value:
    """Normalized character χ^lam_*(t_rho) / χ^lam_*(e) with t_rho in S~(|rho|)."""
    lam, rho = StrictPartition(lam), Partition(rho)
    _check_odd(rho)
    k = sum(rho)
    if k > sum(lam):
        raise SizeMismatch(f"|rho|={k} exceeds |lam|={sum(lam)}")
    total = Root2Value()
    for mu in strict_partitions_of(k):
        coef = restriction_coefficient(lam, mu)
        if coef:
            total += coef * char_value(mu, rho)
    return total


@dataclass(frozen=True)
class ThomaPoint:
    gamma: tuple

    def __post_init__(self):
        g = tuple(as_rational(x) for x in self.gamma)
        while g and g[-1] == 0:
            g = g[:-1]
        if any(x < 0 for x in g):
            raise ValueError("gamma entries must be non-negative")
        if any(a < b for a, b in zip(g, g[1:])):
            raise ValueError("gamma must be weakly decreasing")
        if sum(g) > 1:
            raise ValueError("gamma entries must sum to at most 1")
        object.__setattr__(self, "gamma", g)

    def power_sum(self, m: int) -> Fraction:
        return sum((x**m for x in self.gamma), Fraction(0))


def _thoma(gamma) -> ThomaPoint:
    return gamma if isinstance(gamma, ThomaPoint) else ThomaPoint(tuple(gamma))


def psi(gamma, rho) -> Root2Value:
    """Limit character ψ_γ(t_rho); zero when rho has an even part."""
    gamma, rho = _thoma(gamma), Partition(rho)
    if not is_odd_partition(rho):
        return Root2Value()
    value = Fraction(1)
    for part in rho:
        if part >= 2:
            value *= gamma.power_sum(part)
    return Root2Value.sqrt2_power(len(rho) - sum(rho)) * value


def build_lambda_sequence(gamma, n: int) -> StrictPartition:
    """A strict partition of n whose rows grow like gamma_i * n.

    Parts start at floor(gamma_i n); collisions are resolved by decrementing
    the later part, the remainder is laid below as a staircase of distinct
    parts, and whatever the staircase cannot hold goes to the first row.
    """
    if n < 1:
        raise ValueError("n must be positive")
    gamma = _thoma(gamma)
    parts = []
    for g in gamma.gamma:
        p = (g * n).numerator // (g * n).denominator
        if parts and p >= parts[-1]:
            p = parts[-1] - 1
        if p <= 0:
            break
        parts.append(p)
    rest = n - sum(parts)
    floor = parts[-1] if parts else rest + 1
    while rest > 0 and floor > 1:
        step = min(rest, floor - 1)
        parts.append(step)
        rest -= step
        floor = step
    if rest:
        if not parts:
            raise InfeasibleRemainder(f"cannot place remainder {rest} for n={n}")
        parts[0] += rest
    return StrictPartition(parts)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    lam: StrictPartition
    xi: Root2Value
    psi: Root2Value
    abs_error: Decimal


def convergence_table(gamma, rho, ns: Sequence[int]) -> list[ConvergenceRow]:
    gamma, rho = _thoma(gamma), Partition(rho)
    limit = psi(gamma, rho)
    rows = []
    for n in ns:
        if n < sum(rho):
            raise SizeMismatch(f"n={n} smaller than |rho|={sum(rho)}")
        lam = build_lambda_sequence(gamma, n)
        value = xi(lam, rho)
        rows.append(ConvergenceRow(n, lam, value, limit, (value - limit).to_decimal().copy_abs()))
    return rows


def convergence_csv(rows: Sequence[ConvergenceRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "xi_a", "xi_b", "psi_a", "psi_b", "abs_error"])
    for r in rows:
        writer.writerow(
            [r.n, format_rational(r.xi.a), format_rational(r.xi.b),
             format_rational(r.psi.a), format_rational(r.psi.b), f"{r.abs_error:.30E}"]
        )
    return buf.getvalue()


def multiplicativity_check(gamma, rho, sigma) -> bool:
    return psi(gamma, partition_union(rho, sigma)) == psi(gamma, rho) * psi(gamma, sigma)


def branching_check(lam, k: int, rho) -> bool:
    """Restriction of χ^lam_* to S~(k) evaluated at t_rho, both ways."""
    lam, rho = StrictPartition(lam), Partition(rho)
    n = sum(lam)
    if sum(rho) != k or k > n:
        raise SizeMismatch(f"need |rho| = k <= |lam|, got |rho|={sum(rho)}, k={k}, |lam|={n}")
    from .dimensions import g_skew

    lhs = char_value(lam, partition_union(rho, (1,) * (n - k)))
    rhs = Root2Value()
    for mu in strict_partitions_of(k):
        g = g_skew(lam, mu)
        if g:
            weight = Root2Value.sqrt2_power(n - len(lam) - k + len(mu))
            rhs += weight * g * char_value(mu, rho)
    return lhs == rhs
