import pytest

import fillscope as fs
from fillscope.spaces import (
    builtin_complex,
    builtin_presentation,
    builtin_simplicial,
)


@pytest.fixture
def tetra():
    return builtin_complex("tetra-boundary")


@pytest.fixture
def tetra_sc():
    return builtin_simplicial("tetra-boundary")


@pytest.fixture
def cp2():
    return builtin_complex("cp2")


@pytest.fixture
def torus_cw():
    return builtin_complex("torus-1vertex")


@pytest.fixture
def torus7():
    return builtin_simplicial("torus7")


@pytest.fixture
def triangle():
    return builtin_simplicial("circle-3")


@pytest.fixture
def pres_trivial():
    return builtin_presentation("pres-trivial")


@pytest.fixture
def pres_free():
    return builtin_presentation("pres-free")


@pytest.fixture
def pres_z2():
    return builtin_presentation("pres-z2")


@pytest.fixture
def point():
    return fs.ChainComplex({0: ["p"]}, {}, name="point")
