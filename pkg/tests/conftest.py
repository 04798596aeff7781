"""Shared fixtures: enumerated groups are immutable, so cache them per session."""

import pytest

from tightpoly.enumeration import enumerate_cosets
from tightpoly.presentations import delta_presentation, lambda_presentation


@pytest.fixture(scope="session")
def toroidal_rep():
    """Lambda(4,4)_{-1,1}, the toroidal map {4,4}_{(2,0)}, order 32."""
    return enumerate_cosets(lambda_presentation(4, 4, -1, 1))


@pytest.fixture(scope="session")
def hemicube_rep():
    """Delta(4,3)_{(2,-2,-1,2)}, the hemicube group, order 24."""
    return enumerate_cosets(delta_presentation(4, 3, 2, -2, -1, 2))


@pytest.fixture(scope="session")
def big_lambda_rep():
    """Lambda(48,32)_{-1,1}, order 3072; shared because it is the slow one."""
    return enumerate_cosets(lambda_presentation(48, 32, -1, 1))
