import pytest

from grskit import Field, LinearCode, Matrix

# [7,4] code over F_11 whose puncture and shortening at position 7 are both
# GRS while the code itself is not
COUNTEREXAMPLE_ROWS = [
    [1, 0, 0, 0, 1, 9, 4],
    [0, 1, 0, 0, 4, 6, 2],
    [0, 0, 1, 0, 5, 5, 6],
    [0, 0, 0, 1, 6, 4, 6],
]


@pytest.fixture(scope="session")
def f11():
    return Field(11)


@pytest.fixture(scope="session")
def f8():
    return Field(2, 3)


@pytest.fixture
def counterexample(f11):
    return LinearCode(f11, Matrix(f11, COUNTEREXAMPLE_ROWS))
