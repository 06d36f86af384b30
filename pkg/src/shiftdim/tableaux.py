"""Ground-truth counts of standard tableaux.

Two independent routes: brute-force backtracking over linear extensions of
the cell poset, and the cover recursion for shifted shapes. Neither uses any
closed-form formula.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import (
    OrdinarySkewShape,
    ShiftedSkewShape,
    StrictPartition,
    contains,
    strict_covers_below,
)


def _count_linear_extensions(cells) -> int:
    """Count fillings of ``cells`` increasing along rows and down columns.

    A cell is addable once its left and upper neighbours (when they belong to
    the shape) are filled; labels are placed in increasing order.
    """
    cells = frozenset(cells)
    if not cells:
        return 1
    index = {c: k for k, c in enumerate(sorted(cells))}
    preds = []
    succs = [[] for _ in index]
    for (i, j), k in index.items():
        ps = [index[c] for c in ((i, j - 1), (i - 1, j)) if c in index]
        preds.append(len(ps))
        for p in ps:
            succs[p].append(k)

    waiting = preds[:]
    ready = [k for k, w in enumerate(waiting) if w == 0]
    total = len(index)

    def backtrack(placed: int) -> int:
        if placed == total:
            return 1
        count = 0
        for pos in range(len(ready)):
            k = ready[pos]
            ready[pos] = ready[-1]
            ready.pop()
            opened = []
            for s in succs[k]:
                waiting[s] -= 1
                if waiting[s] == 0:
                    ready.append(s)
                    opened.append(s)
            count += backtrack(placed + 1)
            for _ in opened:
                ready.pop()
            for s in succs[k]:
                waiting[s] += 1
            ready.append(k)
            ready[pos], ready[-1] = ready[-1], ready[pos]
        return count

    return backtrack(0)


def count_shifted_standard_tableaux(shape: ShiftedSkewShape) -> int:
    return _count_linear_extensions(shape.cells)


def count_ordinary_standard_tableaux(shape: OrdinarySkewShape) -> int:
    return _count_linear_extensions(shape.cells)


@lru_cache(maxsize=None)
def _recursive(lam: tuple, mu: tuple) -> int:
    if lam == mu:
        return 1
    if sum(lam) <= sum(mu) or not contains(mu, lam):
        return 0
    return sum(_recursive(tuple(nu), mu) for nu in strict_covers_below(StrictPartition(lam)))


def count_shifted_recursive(lam, mu=()) -> int:
    """g_{lam/mu} from g_{mu/mu} = 1, vanishing off containment, and the
    sum over strict nu obtained by removing one box of lam."""
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    if sum(lam) < sum(mu):
        raise ValueError("outer weight smaller than inner weight")
    return _recursive(tuple(lam), tuple(mu))
