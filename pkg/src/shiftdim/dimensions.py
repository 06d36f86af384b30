"""Closed-form dimensions of shifted and ordinary (skew) diagrams.

Every formula is evaluated over exact rationals and only converted to an
integer at the end; a non-integral result raises :class:`NonIntegerResult`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .partitions import Partition, StrictPartition, contains, remark17_to_ordinary
from .polynomials import eval_Pstar, eval_sstar, falling_factorial


class NonIntegerResult(ArithmeticError):
    pass


@dataclass(frozen=True)
class DimensionResult:
    value: int
    base_dimension: Optional[int] = None
    polynomial_value: Optional[Fraction] = None
    falling: Optional[int] = None


def _to_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to non-integer {x}")
    return x.numerator


def g_closed(lam) -> int:
    lam = StrictPartition(lam)
    value = Fraction(factorial(sum(lam)))
    for p in lam:
        value /= factorial(p)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            value *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    return _to_int(value, f"g{tuple(lam)}")


def f_closed(eta) -> int:
    eta = Partition(eta)
    l = len(eta)
    value = Fraction(factorial(sum(eta)))
    for i, p in enumerate(eta, start=1):
        value /= factorial(p + l - i)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            value *= eta.part(i) - eta.part(j) + j - i
    return _to_int(value, f"f{tuple(eta)}")


def g_skew_trace(lam, mu) -> DimensionResult:
    """g_{lam/mu} = g_lam P*_mu(lam) / (|lam| falling |mu|), with its factors."""
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    k, m = sum(lam), sum(mu)
    if k < m:
        raise ValueError(f"|outer|={k} smaller than |inner|={m}")
    if not contains(mu, lam):
        return DimensionResult(0)
    g = g_closed(lam)
    pstar = eval_Pstar(mu, lam)
    ff = falling_factorial(k, m)
    return DimensionResult(_to_int(g * pstar / ff, f"g{tuple(lam)}/{tuple(mu)}"), g, pstar, ff)


def g_skew(lam, mu=()) -> int:
    return g_skew_trace(lam, mu).value


def f_skew_trace(eta, nu) -> DimensionResult:
    eta, nu = Partition(eta), Partition(nu)
    if sum(eta) < sum(nu):
        raise ValueError(f"|outer|={sum(eta)} smaller than |inner|={sum(nu)}")
    if not contains(nu, eta):
        return DimensionResult(0)
    f = f_closed(eta)
    sstar = eval_sstar(nu, eta)
    ff = falling_factorial(sum(eta), sum(nu))
    return DimensionResult(_to_int(f * sstar / ff, f"f{tuple(eta)}/{tuple(nu)}"), f, sstar, ff)


def f_skew(eta, nu=()) -> int:
    return f_skew_trace(eta, nu).value


def remark17_identity_check(lam, mu) -> bool:
    """Compare P*_mu(lam) g_lam/(|lam|↓|mu|) with s*_nu(eta) f_eta/(|eta|↓|nu|)
    for the ordinary shape eta/nu that coincides with D'_{lam/mu}."""
    eta, nu = remark17_to_ordinary(lam, mu)
    shifted = g_skew_trace(lam, mu)
    ordinary = f_skew_trace(eta, nu)
    lhs = shifted.polynomial_value * shifted.base_dimension / shifted.falling
    rhs = ordinary.polynomial_value * ordinary.base_dimension / ordinary.falling
    return lhs == rhs == shifted.value == ordinary.value
