"""Exit criteria: one test per acceptance criterion, all at zero tolerance
except the frozen convergence threshold of criterion 9."""

import pytest

from shiftdim.characters import convergence_table
from shiftdim.partitions import odd_partitions_of
from shiftdim.verification import CHECKS, CONVERGENCE_GAMMA, CONVERGENCE_THRESHOLD


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__ for c in CHECKS])
def test_criterion(check, capsys):
    result = check("quick")
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.failures[:10]


ODD_RHOS = [rho for k in range(1, 6) for rho in odd_partitions_of(k)]


@pytest.mark.parametrize("rho", ODD_RHOS, ids=[",".join(map(str, r)) for r in ODD_RHOS])
def test_criterion9_by_class(rho):
    e12, e48, e96 = (r.abs_error for r in convergence_table(CONVERGENCE_GAMMA, rho, [12, 48, 96]))
    assert e96 < CONVERGENCE_THRESHOLD
    if all(p == 1 for p in rho):
        assert e12 == e48 == 0
    else:
        assert e48 < e12, f"error at n=48 ({e48:.6E}) not below error at n=12 ({e12:.6E})"
