import pytest

from oddleech.codes import code_c4, code_c11, code_d4
from oddleech.construction import construction_a


@pytest.fixture(scope="session")
def lattice_d4():
    return construction_a(code_d4(), code_id="D4")


@pytest.fixture(scope="session")
def lattice_c4():
    return construction_a(code_c4(), code_id="C4")


@pytest.fixture(scope="session")
def lattice_c11():
    return construction_a(code_c11(), code_id="C11")
