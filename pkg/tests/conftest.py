import pytest

from stokeslab.src.stokeslab.models.stokes import StokesMat
from stokeslab.src.stokeslab.utils import make_rng


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture
def all_ones3():
    return StokesMat.from_rows([[1, 1, 1], [0, 1, 1], [0, 0, 1]])


@pytest.fixture
def all_ones4():
    return StokesMat.from_rows([[1, 1, 1, 1], [0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1]])


@pytest.fixture
def markoff3():
    """k = -2, p = (λ+1)^3."""
    return StokesMat.from_rows([[1, 3, 3], [0, 1, 3], [0, 0, 1]])
