"""Exact supersymmetric polynomials: P, P*, power sums, s* and H.

Two representations are used. Values at a point come from closed sums over
ordered injections (fast, needs pairwise distinct coordinates). Symbolic
expansions go through the antisymmetrize-then-divide-by-Vandermonde route
and are returned in the monomial symmetric basis as
:class:`MonomialPolynomial` objects, one per homogeneous degree.

A symmetric polynomial in ``n`` variables is stored as ``{κ: c_κ}`` meaning
Σ c_κ m_κ with m_κ the monomial symmetric polynomial. Setting the last
variable to zero drops the keys of length ``n`` (see
:meth:`MonomialPolynomial.restrict`); this is the projection Ω(n+1) → Ω(n)
used for stability checks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, StrictPartition, contains, is_odd_partition

Rational = Fraction


class CoincidentCoordinates(ValueError):
    pass


class NonDivisible(ArithmeticError):
    """Exact division failed; indicates an implementation bug."""


class UnsupportedIndex(ValueError):
    pass


class SingularDenominator(ZeroDivisionError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def falling_factorial(x, k: int):
    """x (x-1) ... (x-k+1); 1 for k == 0."""
    out = 1
    for i in range(k):
        out *= x - i
    return out


def power_sum_eval(rho: Iterable[int], point: Sequence) -> Fraction:
    coords = [as_rational(c) for c in point]
    out = Fraction(1)
    for part in rho:
        out *= sum(c**part for c in coords)
    return out


def capital_H(mu: Iterable[int]) -> Fraction:
    mu = StrictPartition(mu)
    out = Fraction(1)
    for p in mu:
        out *= factorial(p)
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            out *= Fraction(mu[i] + mu[j], mu[i] - mu[j])
    return out


def _injections(l: int, n: int):
    return permutations(range(n), l)


def _injection_sum(mu: Sequence[int], coords: Sequence[Fraction], head) -> Fraction:
    """Σ over ordered injections w of head(x_w(i), mu_i) times the cross ratios.

    The cross ratios are ∏ (x_a + x_b)/(x_a - x_b) over a = w(i), i <= l and
    every b with index later than i in the completed permutation; this is the
    (n-l)!-fold reduced form of the full S(n) symmetrization.
    """
    n, l = len(coords), len(mu)
    if l > n:
        return Fraction(0)
    total = Fraction(0)
    for w in _injections(l, n):
        term = Fraction(1)
        for i in range(l):
            term *= head(coords[w[i]], mu[i])
            if not term:
                break
        if not term:
            continue
        chosen = set(w)
        num, den = Fraction(1), Fraction(1)
        for i in range(l):
            a = coords[w[i]]
            for b_idx in w[i + 1:]:
                b = coords[b_idx]
                num *= a + b
                den *= a - b
            for k in range(n):
                if k not in chosen:
                    b = coords[k]
                    num *= a + b
                    den *= a - b
        total += term * num / den
    return total


def _check_distinct(coords: Sequence[Fraction]) -> None:
    if len(set(coords)) != len(coords):
        raise CoincidentCoordinates(
            "coordinates must be pairwise distinct; use expand_in_monomials and substitute"
        )


def eval_P(mu: Iterable[int], point: Sequence) -> Fraction:
    """Value of the Schur P-polynomial P_{mu|n} at a point with n distinct coordinates."""
    mu = StrictPartition(mu)
    coords = [as_rational(c) for c in point]
    if len(mu) > len(coords):
        return Fraction(0)
    _check_distinct(coords)
    return _injection_sum(mu, coords, lambda x, k: x**k)


def eval_Pstar_at(mu: Iterable[int], point: Sequence) -> Fraction:
    """Value of P*_{mu|n} at an arbitrary point with distinct coordinates."""
    mu = StrictPartition(mu)
    coords = [as_rational(c) for c in point]
    if len(mu) > len(coords):
        return Fraction(0)
    _check_distinct(coords)
    return _injection_sum(mu, coords, falling_factorial)


def eval_Pstar(mu: Iterable[int], lam: Iterable[int], shortcut: bool = True) -> Fraction:
    """P*_mu(lam) with the l(lam) parts of lam as coordinates.

    With ``shortcut`` the vanishing for mu not contained in lam is applied
    up front; disabling it forces the full injection sum.
    """
    mu, lam = StrictPartition(mu), StrictPartition(lam)
    if shortcut and not contains(mu, lam):
        return Fraction(0)
    return eval_Pstar_at(mu, lam)


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    a = [row[:] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row, prow = a[r], a[col]
                for c in range(col, n):
                    row[c] -= f * prow[c]
    return det


def eval_sstar(nu: Iterable[int], point: Sequence) -> Fraction:
    """Shifted Schur polynomial s*_nu as a ratio of a falling-factorial
    determinant and the shifted Vandermonde ∏_{i<j} (x_i - x_j + j - i)."""
    nu = Partition(nu)
    x = [as_rational(c) for c in point]
    n = len(x)
    if len(nu) > n:
        raise ValueError(f"l(nu)={len(nu)} exceeds number of coordinates {n}")
    den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            den *= x[i] - x[j] + (j - i)
    if den == 0:
        raise SingularDenominator("shifted Vandermonde vanishes at this point")
    # 0-based i, j: (x_i + n - 1 - i) falling (nu_j + n - 1 - j)
    m = [
        [Fraction(falling_factorial(x[i] + n - 1 - i, nu.part(j + 1) + n - 1 - j)) for j in range(n)]
        for i in range(n)
    ]
    return _det(m) / den


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over the integers, keyed by exponent tuple


def _pmul(f: dict, g: dict) -> dict:
    out: dict = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def _linear(n: int, i: int, j: int, sign: int) -> dict:
    ei = tuple(1 if k == i else 0 for k in range(n))
    ej = tuple(1 if k == j else 0 for k in range(n))
    return {ei: 1, ej: sign}


def _divide_by_difference(f: dict, i: int, j: int) -> dict:
    """Exact quotient f / (x_i - x_j); raises NonDivisible on a remainder."""
    quot: dict = {}
    # peel one power of x_i off each term; the x_j-shifted leftover has a
    # smaller x_i exponent, so one descending sweep over x_i degree suffices
    top = max((e[i] for e in f), default=0)
    buckets: dict[int, dict] = {}
    for e, c in f.items():
        buckets.setdefault(e[i], {})[e] = c
    for a in range(top, 0, -1):
        for e, c in buckets.get(a, {}).items():
            if not c:
                continue
            q = list(e)
            q[i] -= 1
            q = tuple(q)
            quot[q] = quot.get(q, 0) + c
            moved = list(q)
            moved[j] += 1
            moved = tuple(moved)
            lower = buckets.setdefault(a - 1, {})
            lower[moved] = lower.get(moved, 0) + c
    if any(buckets.get(0, {}).values()):
        raise NonDivisible(f"remainder after dividing by x{i + 1} - x{j + 1}")
    return {e: c for e, c in quot.items() if c}


def _symmetrize_raw(r: Mapping[tuple, Fraction], l: int, n: int) -> tuple[dict, int]:
    """Polynomial R~_n as ``(integer poly, common denominator)``.

    u_n = r ∏_{i<=l, i<j<=n}(x_i + x_j) ∏_{l<i<j<=n}(x_i - x_j) is
    antisymmetrized over S(n) and divided exactly by the Vandermonde.
    """
    if l > n:
        raise ValueError(f"l={l} exceeds n={n}")
    den = 1
    for c in r.values():
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    u = {}
    for e, c in r.items():
        if len(e) != l:
            raise ValueError(f"exponent {e} does not have {l} entries")
        c = Fraction(c) * den
        if c:
            u[tuple(e) + (0,) * (n - l)] = int(c)
    for i in range(l):
        for j in range(i + 1, n):
            u = _pmul(u, _linear(n, i, j, 1))
    for i in range(l, n):
        for j in range(i + 1, n):
            u = _pmul(u, _linear(n, i, j, -1))

    # Σ_w sgn(w) u(x_w): only exponent vectors with distinct entries survive,
    # each contributing sgn(sorting permutation) times its coefficient to the
    # alternant of its sorted vector
    alt: dict = {}
    for e, c in u.items():
        if len(set(e)) < n:
            continue
        order = sorted(range(n), key=lambda k: -e[k])
        sign = _perm_sign(order)
        key = tuple(e[k] for k in order)
        alt[key] = alt.get(key, 0) + sign * c
    antisym: dict = {}
    perms = list(permutations(range(n)))
    signs = [_perm_sign(p) for p in perms]
    for key, c in alt.items():
        if not c:
            continue
        for p, s in zip(perms, signs):
            e = [0] * n
            for pos, k in enumerate(p):
                e[k] = key[pos]
            antisym[tuple(e)] = s * c

    quot = antisym
    for i in range(n):
        for j in range(i + 1, n):
            quot = _divide_by_difference(quot, i, j)
    return quot, den


def _perm_sign(p: Sequence[int]) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            k = p[i]
            p[i], p[k] = p[k], p[i]
            sign = -sign
    return sign


@dataclass(frozen=True)
class MonomialPolynomial:
    """Homogeneous symmetric polynomial Σ c_κ m_κ in ``n_vars`` variables."""

    degree: int
    n_vars: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, c in self.coeffs.items():
            k = Partition(k)
            c = as_rational(c)
            if sum(k) != self.degree or len(k) > self.n_vars:
                raise ValueError(f"key {tuple(k)} incompatible with degree {self.degree}, n={self.n_vars}")
            if c:
                clean[k] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialPolynomial):
            return NotImplemented
        return (self.degree, self.n_vars, self.coeffs) == (other.degree, other.n_vars, other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.n_vars, tuple(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, kappa: Iterable[int]) -> Fraction:
        return self.coeffs.get(Partition(kappa), Fraction(0))

    def scale(self, s) -> "MonomialPolynomial":
        return MonomialPolynomial(self.degree, self.n_vars, {k: c * s for k, c in self.coeffs.items()})

    def restrict(self, n: int) -> "MonomialPolynomial":
        """Set the variables past the first ``n`` to zero."""
        return MonomialPolynomial(self.degree, n, {k: c for k, c in self.coeffs.items() if len(k) <= n})

    def evaluate(self, point: Sequence) -> Fraction:
        x = [as_rational(c) for c in point]
        if len(x) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} coordinates, got {len(x)}")
        total = Fraction(0)
        for kappa, c in self.coeffs.items():
            padded = tuple(kappa) + (0,) * (self.n_vars - len(kappa))
            total += c * sum(
                math.prod(x[i] ** e for i, e in enumerate(exps) if e)
                for exps in _distinct_permutations(padded)
            )
        return total

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "n_vars": self.n_vars,
            "terms": [
                {"partition": k.serialize(), "num": c.numerator, "den": c.denominator}
                for k, c in self.coeffs.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MonomialPolynomial":
        from .partitions import parse_partition

        return cls(
            int(data["degree"]),
            int(data["n_vars"]),
            {parse_partition(t["partition"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]},
        )


def _distinct_permutations(items: Sequence[int]):
    items = sorted(items)
    n = len(items)

    def rec(prefix, remaining):
        if not remaining:
            yield tuple(prefix)
            return
        prev = None
        for idx, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            yield from rec(prefix + [v], remaining[:idx] + remaining[idx + 1:])

    if n == 0:
        yield ()
    else:
        yield from rec([], items)


def _graded(raw: dict, den: int, n: int) -> dict[int, MonomialPolynomial]:
    """Read off monomial-basis coefficients of a symmetric integer polynomial."""
    by_degree: dict[int, dict] = {}
    for e, c in raw.items():
        if all(a >= b for a, b in zip(e, e[1:])):
            by_degree.setdefault(sum(e), {})[Partition(e)] = Fraction(c, den)
    return {
        d: MonomialPolynomial(d, n, coeffs)
        for d, coeffs in sorted(by_degree.items())
        if any(coeffs.values())
    }


def symmetrize_Rtilde(r: Mapping[tuple, Fraction], l: int, n: int) -> dict[int, MonomialPolynomial]:
    """Symmetrization R~_n of a polynomial ``r`` in the first ``l`` variables.

    ``r`` maps exponent vectors of length ``l`` to coefficients. The result
    is split into homogeneous components keyed by degree; the zero
    polynomial is the empty dict.
    """
    raw, den = _symmetrize_raw(r, l, n)
    return _graded(raw, den, n)


def _monomial_r(mu: Sequence[int], n: int) -> dict:
    return {tuple(mu): Fraction(1, factorial(n - len(mu)))}


def _falling_r(mu: Sequence[int], n: int) -> dict:
    """Expansion of ∏ (x_i falling mu_i) / (n - l)! as an exponent map."""
    r = {tuple(0 for _ in mu): Fraction(1, factorial(n - len(mu)))}
    for i, k in enumerate(mu):
        fac = _falling_coeffs(k)
        nxt: dict = {}
        for e, c in r.items():
            for power, a in enumerate(fac):
                if a:
                    e2 = list(e)
                    e2[i] += power
                    e2 = tuple(e2)
                    nxt[e2] = nxt.get(e2, 0) + c * a
        r = nxt
    return r


def _falling_coeffs(k: int) -> list[int]:
    """Coefficients (by power) of x (x-1) ... (x-k+1)."""
    coeffs = [1]
    for i in range(k):
        shifted = [0] + coeffs
        for p in range(len(coeffs)):
            shifted[p] -= i * coeffs[p]
        coeffs = shifted
    return coeffs


def _power_sum_poly(rho: Sequence[int], n: int) -> dict:
    out = {(0,) * n: 1}
    for part in rho:
        ps = {tuple(part if k == i else 0 for k in range(n)): 1 for i in range(n)}
        out = _pmul(out, ps)
    return out


def expand_in_monomials(family: str, index: Iterable[int], n: int) -> dict[int, MonomialPolynomial]:
    """Monomial-basis expansion of P_{index|n}, P*_{index|n} or p_{index|n}.

    Returned as ``{degree: MonomialPolynomial}``; P and p are homogeneous so
    they have a single component (or none when zero).
    """
    index = Partition(index)
    if family in ("P", "Pstar"):
        if not index.is_strict():
            raise UnsupportedIndex(f"{family} needs a strict index, got {tuple(index)}")
        if len(index) > n:
            return {}
        r = _monomial_r(index, n) if family == "P" else _falling_r(index, n)
        return symmetrize_Rtilde(r, len(index), n)
    if family == "p":
        if not is_odd_partition(index):
            raise UnsupportedIndex(f"power sum index must have odd parts, got {tuple(index)}")
        return _graded(_power_sum_poly(index, n), 1, n)
    raise UnsupportedIndex(f"unknown family {family!r}")


def supersymmetry_test(poly, trials: int = 20, seed: int = 0) -> bool:
    """Randomized check that poly(.., t, .., -t, ..) does not depend on t.

    ``poly`` is a MonomialPolynomial or a ``{degree: MonomialPolynomial}``
    dict. Coordinates are rationals p/q with p, q uniform in [1, 1000].
    """
    parts = list(poly.values()) if isinstance(poly, Mapping) else [poly]
    if not parts:
        return True
    n = parts[0].n_vars
    if n < 2:
        raise ValueError("supersymmetry needs at least two variables")
    rng = random.Random(seed)

    def draw() -> Fraction:
        return Fraction(rng.randint(1, 1000), rng.randint(1, 1000))

    def value(x):
        return sum((p.evaluate(x) for p in parts), Fraction(0))

    for _ in range(trials):
        i, j = sorted(rng.sample(range(n), 2))
        base = [draw() for _ in range(n)]
        t1, t2 = draw(), draw()
        while t2 == t1:
            t2 = draw()
        x1, x2 = base[:], base[:]
        x1[i], x1[j] = t1, -t1
        x2[i], x2[j] = t2, -t2
        if value(x1) != value(x2):
            return False
    return True
