import numpy as np
import pytest

from codemorph import Code

EXAMPLE1 = ["", "12", "23", "34", "123", "234", "1234"]


@pytest.fixture
def example1():
    return Code.from_strings(EXAMPLE1, 4)


@pytest.fixture
def H():
    return np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]], dtype=np.uint8)


@pytest.fixture
def V():
    return np.array(
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]], dtype=np.uint8
    )


@pytest.fixture
def V_prime(V):
    Vp = V.copy()
    Vp[6, 1] = 0
    return Vp


@pytest.fixture
def small_pair():
    """Two isomorphic codes with Boolean ranks 2 and 3."""
    C = np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=np.uint8)
    Cp = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 1]], dtype=np.uint8)
    return C, Cp
