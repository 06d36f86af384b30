from itertools import permutations

import pytest

from shiftdim.partitions import (
    contains,
    ordinary_skew_shape,
    partitions_upto,
    remark17_to_ordinary,
    shifted_skew_shape,
    strict_covers_below,
    strict_partitions_upto,
)
from shiftdim.tableaux import (
    count_ordinary_standard_tableaux,
    count_shifted_recursive,
    count_shifted_standard_tableaux,
)


def brute_force_count(cells):
    """Try every bijection cells -> 1..N and keep the standard ones."""
    cells = sorted(cells)
    total = 0
    for labels in permutations(range(1, len(cells) + 1)):
        t = dict(zip(cells, labels))
        if all(
            t[(i, j)] < t[c]
            for (i, j) in cells
            for c in ((i, j + 1), (i + 1, j))
            if c in t
        ):
            total += 1
    return total


def test_shifted_examples():
    assert count_shifted_standard_tableaux(shifted_skew_shape((3, 1), (2,))) == 2
    assert count_shifted_standard_tableaux(shifted_skew_shape((2, 1), (2, 1))) == 1
    assert count_shifted_standard_tableaux(shifted_skew_shape((3, 2, 1))) == 2


def test_ordinary_examples():
    assert count_ordinary_standard_tableaux(ordinary_skew_shape((2, 1))) == 2
    assert count_ordinary_standard_tableaux(ordinary_skew_shape((2, 1), (1,))) == 2
    assert count_ordinary_standard_tableaux(ordinary_skew_shape((7,))) == 1


def test_recursive_examples():
    assert count_shifted_recursive((4, 2), (4, 2)) == 1
    assert count_shifted_recursive((3, 1), (2, 1)) == 1
    assert count_shifted_recursive((4,), (2, 1)) == 0
    assert count_shifted_recursive((3, 2, 1)) == 2


def test_backtracking_matches_brute_force_small():
    for lam in strict_partitions_upto(7):
        for mu in strict_partitions_upto(sum(lam)):
            if contains(mu, lam):
                cells = shifted_skew_shape(lam, mu).cells
                assert count_shifted_standard_tableaux(shifted_skew_shape(lam, mu)) == brute_force_count(cells)
    for eta in partitions_upto(6):
        cells = ordinary_skew_shape(eta).cells
        assert count_ordinary_standard_tableaux(ordinary_skew_shape(eta)) == brute_force_count(cells)


def test_oracle_agreement_and_branching():
    for lam in strict_partitions_upto(10):
        for mu in strict_partitions_upto(sum(lam)):
            if not contains(mu, lam):
                continue
            count = count_shifted_standard_tableaux(shifted_skew_shape(lam, mu))
            assert count == count_shifted_recursive(lam, mu)
            if sum(mu) < sum(lam):
                below = sum(
                    count_shifted_standard_tableaux(shifted_skew_shape(nu, mu))
                    for nu in strict_covers_below(lam)
                    if contains(mu, nu)
                )
                assert count == below


def test_remark17_count_transfer():
    for lam in strict_partitions_upto(10):
        for mu in strict_partitions_upto(sum(lam)):
            if contains(mu, lam) and len(lam) - len(mu) in (0, 1):
                eta, nu = remark17_to_ordinary(lam, mu)
                assert count_shifted_standard_tableaux(shifted_skew_shape(lam, mu)) == \
                    count_ordinary_standard_tableaux(ordinary_skew_shape(eta, nu))


def test_recursive_rejects_inverted_sizes():
    with pytest.raises(ValueError):
        count_shifted_recursive((1,), (2, 1))
