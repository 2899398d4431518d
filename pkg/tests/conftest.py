from fractions import Fraction
from pathlib import Path

import pytest

from lgdual import QuotientLGModel, group_from_generators, parse_polynomial

MODELS = Path(__file__).resolve().parent.parent / "models"

THIRD = Fraction(1, 3)


@pytest.fixture
def models_dir():
    return MODELS


@pytest.fixture
def fermat():
    return parse_polynomial("x^3 + y^3 + z^3", "xyz")


@pytest.fixture
def loop():
    return parse_polynomial("x^2*y + y^2*z + z^2*x", "xyz")


@pytest.fixture
def fermat_xyz():
    return parse_polynomial("x^3 + y^3 + z^3 + x*y*z", "xyz")


@pytest.fixture
def J():
    return group_from_generators(3, [(THIRD, THIRD, THIRD)])


@pytest.fixture
def trivial3():
    return group_from_generators(3, [])


@pytest.fixture
def gmax3():
    return group_from_generators(3, [(THIRD, 0, 0), (0, THIRD, 0), (0, 0, THIRD)])


@pytest.fixture
def fermat_J(fermat, J):
    return QuotientLGModel(fermat, J)


@pytest.fixture
def loop_J(loop, J):
    return QuotientLGModel(loop, J)
