from fractions import Fraction
from math import factorial

import pytest

from shiftdim.dimensions import (
    f_closed,
    f_skew,
    f_skew_trace,
    g_closed,
    g_skew,
    g_skew_trace,
    remark17_identity_check,
)
from shiftdim.partitions import (
    LengthCondition,
    contains,
    ordinary_skew_shape,
    partitions_upto,
    shifted_skew_shape,
    strict_partitions_upto,
)
from shiftdim.tableaux import count_ordinary_standard_tableaux, count_shifted_standard_tableaux


@pytest.mark.parametrize("lam, expected", [((3, 1), 2), ((6,), 1), ((3, 2, 1), 2), ((), 1)])
def test_g_closed(lam, expected):
    assert g_closed(lam) == expected


@pytest.mark.parametrize("eta, expected", [((2, 1), 2), ((5,), 1), ((2, 2), 2), ((), 1), ((3, 2, 1), 16)])
def test_f_closed(eta, expected):
    assert f_closed(eta) == expected


def test_g_skew_examples():
    assert g_skew((3, 1), (2,)) == 2
    assert g_skew((4, 2, 1), (4, 2, 1)) == 1
    assert g_skew((4, 1), (3, 2)) == 0


def test_g_skew_trace():
    t = g_skew_trace((3, 1), (2,))
    assert (t.value, t.base_dimension, t.polynomial_value, t.falling) == (2, 2, Fraction(12), 12)


def test_f_skew_examples():
    assert f_skew((2, 1), (1,)) == 2
    assert f_skew((3, 3), (3, 3)) == 1
    assert f_skew((3, 2), (2, 1)) == 2
    assert f_skew((2, 2), (3,)) == 0
    assert f_skew_trace((2, 1), (1,)).polynomial_value == 3


def test_theorem_against_oracle():
    for lam in strict_partitions_upto(10):
        assert g_closed(lam) == g_skew(lam, ())
        for mu in strict_partitions_upto(sum(lam)):
            if contains(mu, lam):
                assert g_skew(lam, mu) == count_shifted_standard_tableaux(shifted_skew_shape(lam, mu))


def test_f_against_oracle():
    for eta in partitions_upto(9):
        assert f_closed(eta) == f_skew(eta, ())
        for nu in partitions_upto(sum(eta)):
            if contains(nu, eta):
                assert f_skew(eta, nu) == count_ordinary_standard_tableaux(ordinary_skew_shape(eta, nu))


def test_g_mu_mu_normalization():
    # g_mu P*_mu(mu) / m! = 1
    for mu in strict_partitions_upto(10):
        t = g_skew_trace(mu, mu)
        assert t.base_dimension * t.polynomial_value == factorial(sum(mu))


def test_remark17_examples():
    assert remark17_identity_check((3, 1), (2,))
    assert remark17_identity_check((2, 1), (2, 1))
    assert remark17_identity_check((4, 2), (3, 1))
    with pytest.raises(LengthCondition):
        remark17_identity_check((3, 2, 1), (1,))


def test_inverted_sizes_rejected():
    with pytest.raises(ValueError):
        g_skew((1,), (2,))
