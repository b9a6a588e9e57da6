import pytest

from epslab.ring import make_ring


@pytest.fixture
def plane():
    """k[x, y]"""
    return make_ring(2, "xy")


@pytest.fixture
def nilpotent_ring():
    """k[x, y, z]/(z^2, zy): dim 2, N = (z), dim N = 1."""
    return make_ring(3, "xyz", [(0, 0, 2), (0, 1, 1)])


@pytest.fixture
def correction_ring():
    """k[x, y, z]/(x^2 y, y^2 z), where (I^n + N)^sat and (I^n)^sat + N differ for I = (y, x^2)."""
    return make_ring(3, "xyz", [(2, 1, 0), (0, 2, 1)])
