from fractions import Fraction

import pytest


@pytest.fixture
def gamma_example():
    return (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
