"""Partitions, strict partitions and their (shifted) skew diagrams.

Partitions are immutable tuples of positive parts in weakly decreasing
order. Trailing zeros are never stored, so ``len`` is the length l(λ).
Cell coordinates are 1-based ``(row, column)`` pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class PartitionError(ValueError):
    """Base class for malformed partition input."""


class NonPositivePart(PartitionError):
    pass


class NotStrict(PartitionError):
    pass


class NotContained(PartitionError):
    pass


class LengthCondition(PartitionError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise NonPositivePart(f"negative part in {parts}")
        parts = tuple(sorted((p for p in parts if p), reverse=True))
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({','.join(map(str, self))})"

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part accessor, zero past the length."""
        return self[i - 1] if i <= len(self) else 0

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self if p == value)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def serialize(self) -> str:
        return format_partition(self)


class StrictPartition(Partition):
    """Partition with pairwise distinct parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if not Partition.is_strict(self):
            raise NotStrict(f"{tuple(self)} has repeated parts")
        return self


def make_partition(parts: Iterable[int], strict_required: bool = False) -> Partition:
    if strict_required:
        return StrictPartition(parts)
    return Partition(parts)


def parse_partition(text: str, strict_required: bool = False) -> Partition:
    """Parse ``"6,5,3,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return make_partition((), strict_required)
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
    return make_partition(parts, strict_required)


def format_partition(parts: Iterable[int]) -> str:
    return ",".join(str(p) for p in parts)


def contains(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff mu ⊂ lam, i.e. mu_i <= lam_i for every row."""
    mu, lam = tuple(mu), tuple(lam)
    if len(mu) > len(lam):
        return False
    return all(a <= b for a, b in zip(mu, lam))


def is_odd_partition(rho: Iterable[int]) -> bool:
    return all(p % 2 for p in rho)


def partition_union(rho: Iterable[int], sigma: Iterable[int]) -> Partition:
    return Partition(tuple(rho) + tuple(sigma))


def strict_covers_below(lam: StrictPartition) -> set[StrictPartition]:
    """Strict partitions obtained from lam by removing a single box."""
    out = set()
    for i, p in enumerate(lam):
        parts = list(lam)
        parts[i] -= 1
        if parts[i] and i + 1 < len(lam) and parts[i] == lam[i + 1]:
            continue
        out.add(StrictPartition(parts))
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _strict_partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in decreasing lexicographic order."""
    return [Partition(p) for p in _partitions(n, n)]


def strict_partitions_of(n: int) -> list[StrictPartition]:
    """DP_n in decreasing lexicographic order."""
    return [StrictPartition(p) for p in _strict_partitions(n, n)]


def odd_partitions_of(n: int) -> list[Partition]:
    return [p for p in partitions_of(n) if is_odd_partition(p)]


def strict_partitions_upto(n: int) -> Iterator[StrictPartition]:
    for k in range(n + 1):
        yield from strict_partitions_of(k)


def partitions_upto(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


@dataclass(frozen=True)
class ShiftedSkewShape:
    """Cells of D'_{outer/inner}; row i of D'_λ spans columns i..λ_i+i-1."""

    outer: StrictPartition
    inner: StrictPartition
    cells: frozenset

    def __len__(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class OrdinarySkewShape:
    outer: Partition
    inner: Partition
    cells: frozenset

    def __len__(self) -> int:
        return len(self.cells)


def shifted_skew_shape(lam, mu=()) -> ShiftedSkewShape:
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    if not contains(mu, lam):
        raise NotContained(f"inner {mu.serialize()!r} not contained in outer {lam.serialize()!r}")
    cells = frozenset(
        (i, j)
        for i in range(1, len(lam) + 1)
        for j in range(mu.part(i) + i, lam.part(i) + i)
    )
    return ShiftedSkewShape(lam, mu, cells)


def ordinary_skew_shape(eta, nu=()) -> OrdinarySkewShape:
    eta, nu = Partition(eta), Partition(nu)
    if not contains(nu, eta):
        raise NotContained(f"inner {nu.serialize()!r} not contained in outer {eta.serialize()!r}")
    cells = frozenset(
        (i, j)
        for i in range(1, len(eta) + 1)
        for j in range(nu.part(i) + 1, eta.part(i) + 1)
    )
    return OrdinarySkewShape(eta, nu, cells)


def remark17_to_ordinary(lam, mu) -> tuple[Partition, Partition]:
    """Ordinary skew shape eta/nu with the same cells as D'_{lam/mu}.

    Only exists when l(lam) - l(mu) is 0 or 1; then eta_i = lam_i + i - 1
    and nu_i = mu_i + i - 1 for i up to l(lam).
    """
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    if not contains(mu, lam):
        raise NotContained(f"inner {mu.serialize()!r} not contained in outer {lam.serialize()!r}")
    if len(lam) - len(mu) not in (0, 1):
        raise LengthCondition(
            f"need l(outer) - l(inner) in {{0, 1}}, got {len(lam)} - {len(mu)}"
        )
    rows = range(1, len(lam) + 1)
    eta = Partition(lam.part(i) + i - 1 for i in rows)
    nu = Partition(mu.part(i) + i - 1 for i in rows)
    return eta, nu
