from pathlib import Path

import pytest

import support

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def interval():
    return support.interval()


@pytest.fixture
def circle():
    return support.circle()


@pytest.fixture
def wedge():
    return support.wedge_of_circles(2)


@pytest.fixture
def sphere():
    return support.sphere()


@pytest.fixture
def torus():
    return support.torus()


@pytest.fixture
def disk3():
    return support.disk3()


@pytest.fixture
def disk3_probe():
    return support.disk3_probe()


@pytest.fixture
def square():
    return support.square()
