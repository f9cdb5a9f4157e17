import random

import pytest

from jjalgebra.classify5 import b3, h4_algebra, h4_omega, j50, j51, j52, j53, trivial5


@pytest.fixture
def rng():
    return random.Random(20240831)


@pytest.fixture
def h4():
    return h4_algebra()


@pytest.fixture
def omega0():
    return h4_omega()


@pytest.fixture
def catalog_structures():
    return {
        "J5,0": j50(),
        "J5,1": j51(),
        "J5,2": j52(),
        "J5,3": j53(),
        "B3": b3(),
        "trivial": trivial5(),
    }
