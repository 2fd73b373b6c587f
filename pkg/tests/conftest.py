import pytest

from nodalops import CurveRing, Poly, nodal_cubic


@pytest.fixture
def nodal() -> CurveRing:
    return nodal_cubic()


@pytest.fixture
def two_lines() -> CurveRing:
    """The second test curve: factors t and t - 1, so f = t^2 - t."""
    return CurveRing([Poly({1: 1}), Poly({1: 1, 0: -1})])
