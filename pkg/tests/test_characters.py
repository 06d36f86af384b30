from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shiftdim.characters import (
    EvenPart,
    Root2Value,
    SizeMismatch,
    ThomaPoint,
    branching_check,
    build_lambda_sequence,
    char_value,
    character_table,
    convergence_csv,
    convergence_table,
    multiplicativity_check,
    p_to_P_coefficients,
    psi,
    restriction_coefficient,
    xi,
)
from shiftdim.dimensions import g_closed
from shiftdim.partitions import odd_partitions_of, strict_partitions_of, strict_partitions_upto
from shiftdim.polynomials import expand_in_monomials

F = Fraction
SQRT2 = Root2Value(0, 1)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)


@given(rationals, rationals, rationals, rationals)
def test_root2_ring(a, b, c, d):
    x, y = Root2Value(a, b), Root2Value(c, d)
    assert x * y == Root2Value(a * c + 2 * b * d, a * d + b * c)
    assert x + y - y == x
    if y:
        assert (x * y) / y == x
    # numeric evaluation is a ring homomorphism to within rounding
    with localcontext() as ctx:
        ctx.prec = 50
        assert abs((x * y).to_decimal() - x.to_decimal() * y.to_decimal()) < Decimal("1e-40")


def test_sqrt2_power():
    assert Root2Value.sqrt2_power(0) == 1
    assert Root2Value.sqrt2_power(1) == SQRT2
    assert Root2Value.sqrt2_power(-1) == Root2Value(0, F(1, 2))
    assert Root2Value.sqrt2_power(-4) == F(1, 4)
    assert SQRT2 * SQRT2 == 2


def test_p_to_P_examples():
    assert p_to_P_coefficients((1,)) == {(1,): 1}
    assert p_to_P_coefficients((1, 1)) == {(2,): 1}
    assert p_to_P_coefficients((3,)) == {(3,): 1, (2, 1): -2}
    with pytest.raises(EvenPart):
        p_to_P_coefficients((2,))


def test_p_to_P_reconstructs_power_sums_in_more_variables():
    # the solve runs with few variables; the identity must hold at n = k
    for k in range(1, 6):
        for rho in odd_partitions_of(k):
            coeffs = p_to_P_coefficients(rho)
            lhs = {}
            for mu, c in coeffs.items():
                for key, v in expand_in_monomials("P", mu, k)[k].coeffs.items():
                    lhs[key] = lhs.get(key, 0) + c * v
            assert {key: v for key, v in lhs.items() if v} == expand_in_monomials("p", rho, k)[k].coeffs


def test_char_value_examples():
    assert char_value((2,), (1, 1)) == SQRT2
    assert char_value((3,), (1, 1, 1)) == 2
    assert char_value((2, 1), (3,)) == -SQRT2
    with pytest.raises(SizeMismatch):
        char_value((2, 1), (1, 1))
    with pytest.raises(EvenPart):
        char_value((2, 1), (2, 1))


def test_identity_and_rationality():
    for k in range(1, 9):
        for mu in strict_partitions_of(k):
            assert char_value(mu, (1,) * k) == Root2Value.sqrt2_power(k - len(mu)) * g_closed(mu)
            for rho in odd_partitions_of(k):
                v = char_value(mu, rho)
                assert (v.b == 0) if (k - len(mu)) % 2 == 0 else (v.a == 0)


def test_character_table_json():
    table = character_table(3)
    data = table.to_json()
    assert data["k"] == 3
    assert {"mu": "2,1", "rho": "3", "a": "0/1", "b": "-1/1"} in data["rows"]
    assert table[((3,), (1, 1, 1))] == 2


def test_restriction_coefficient_examples():
    assert restriction_coefficient((3, 1), (2,)) == Root2Value(0, F(1, 2))
    assert restriction_coefficient((3, 1), (3, 1)) == Root2Value.sqrt2_power(-2) * 12 / 24
    assert restriction_coefficient((4,), (2, 1)) == 0
    assert restriction_coefficient((2, 1), (2, 1)) == Root2Value(0, F(1, 2))


def test_xi_examples():
    assert xi((2, 1), (1, 1)) == 1
    lam = (3, 2, 1)
    assert xi(lam, (3,)) == char_value(lam, (3, 1, 1, 1)) / char_value(lam, (1,) * 6)


def test_xi_normalization():
    for lam in strict_partitions_upto(8):
        for k in range(sum(lam) + 1):
            assert xi(lam, (1,) * k) == 1


def test_xi_matches_character_ratio():
    for lam in strict_partitions_upto(7):
        n = sum(lam)
        for k in range(1, n + 1):
            for rho in odd_partitions_of(k):
                direct = char_value(lam, tuple(rho) + (1,) * (n - k)) / char_value(lam, (1,) * n)
                assert xi(lam, rho) == direct


def test_psi_examples(gamma_example):
    assert psi(gamma_example, (3,)) == F(1, 12)
    assert psi(gamma_example, (2, 1)) == 0
    for rho in [(1,), (3, 1), (5, 3, 1, 1)]:
        assert psi((1,), rho) == Root2Value.sqrt2_power(len(rho) - sum(rho))


def test_thoma_point_validation():
    with pytest.raises(ValueError):
        ThomaPoint((F(1, 3), F(1, 2)))
    with pytest.raises(ValueError):
        ThomaPoint((F(2, 3), F(2, 3)))


def test_build_lambda_sequence(gamma_example):
    assert build_lambda_sequence(gamma_example, 12) == (6, 4, 2)
    assert build_lambda_sequence(gamma_example, 60) == (30, 20, 10)
    assert build_lambda_sequence((1,), 5) == (5,)


@given(
    st.lists(st.fractions(min_value=0, max_value=1, max_denominator=12), max_size=4),
    st.integers(min_value=1, max_value=300),
)
def test_build_lambda_sequence_is_strict_partition_of_n(raw, n):
    raw = sorted(raw, reverse=True)
    total = sum(raw)
    gamma = [g / total for g in raw] if total > 1 else raw
    lam = build_lambda_sequence(gamma, n)
    assert sum(lam) == n
    assert all(a > b for a, b in zip(lam, lam[1:]))


def test_convergence_examples(gamma_example):
    rows = convergence_table(gamma_example, (3,), [12, 24, 48])
    errors = [r.abs_error for r in rows]
    assert errors[0] > errors[1] > errors[2]
    assert all(r.abs_error == 0 for r in convergence_table(gamma_example, (1,), [12, 40, 90]))
    # a single row is already at the limit for every n
    assert all(r.abs_error == 0 for r in convergence_table((1,), (3,), [10, 40, 160]))


def test_convergence_csv(gamma_example):
    text = convergence_csv(convergence_table(gamma_example, (3,), [12]))
    header, row = text.strip().splitlines()
    assert header == "n,xi_a,xi_b,psi_a,psi_b,abs_error"
    assert row.startswith("12,-1/22,0/1,1/12,0/1,")
    # at least 30 significant digits in the error column
    mantissa = row.rsplit(",", 1)[1].split("E")[0].replace(".", "")
    assert len(mantissa) >= 30


def test_multiplicativity_examples():
    assert multiplicativity_check((F(1, 2), F(1, 3), F(1, 6)), (3,), (1,))
    assert multiplicativity_check((F(1, 2),), (2,), (1,))
    g = (F(1, 2), F(1, 2))
    assert psi(g, (3, 3)) == F(1, 64) == psi(g, (3,)) * psi(g, (3,))


def test_branching_examples():
    assert branching_check((3, 1), 3, (1, 1, 1))
    assert branching_check((2, 1), 2, (1, 1))
    assert branching_check((4, 2, 1), 7, (1,) * 7)


def test_branching_exhaustive():
    for lam in strict_partitions_upto(7):
        for k in range(1, sum(lam) + 1):
            for rho in odd_partitions_of(k):
                assert branching_check(lam, k, rho)
