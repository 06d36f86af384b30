"""Dimensions of skew shifted Young diagrams and spin characters of S~(n)."""

from .characters import (
    CharacterTable,
    Root2Value,
    ThomaPoint,
    branching_check,
    build_lambda_sequence,
    char_value,
    character_table,
    convergence_table,
    multiplicativity_check,
    p_to_P_coefficients,
    psi,
    restriction_coefficient,
    xi,
)
from .dimensions import f_closed, f_skew, g_closed, g_skew, remark17_identity_check
from .partitions import (
    OrdinarySkewShape,
    Partition,
    ShiftedSkewShape,
    StrictPartition,
    contains,
    is_odd_partition,
    make_partition,
    ordinary_skew_shape,
    partition_union,
    remark17_to_ordinary,
    shifted_skew_shape,
    strict_covers_below,
)
from .polynomials import (
    MonomialPolynomial,
    capital_H,
    eval_P,
    eval_Pstar,
    eval_sstar,
    expand_in_monomials,
    falling_factorial,
    power_sum_eval,
    supersymmetry_test,
    symmetrize_Rtilde,
)
from .tableaux import (
    count_ordinary_standard_tableaux,
    count_shifted_recursive,
    count_shifted_standard_tableaux,
)

__version__ = "0.1.0"
