from __future__ import annotations

import pytest

import helpers


@pytest.fixture
def d8():
    return helpers.dihedral8()


@pytest.fixture
def q8():
    return helpers.quaternion8()


@pytest.fixture
def s4():
    return helpers.sym4()


@pytest.fixture
def z2():
    return helpers.free_abelian(2)


@pytest.fixture
def heis():
    return helpers.heisenberg()


@pytest.fixture
def dinf():
    return helpers.dihedral_infinite()


@pytest.fixture(scope="session")
def corpus():
    return helpers.finite_corpus()
