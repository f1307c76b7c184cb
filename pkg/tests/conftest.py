import pytest

from fusionaudit import audit, construction
from fusionaudit.characters import dixon_table, fusion_tensor
from fusionaudit.groups import elementary_abelian_16, q8_group


@pytest.fixture(scope="session")
def cg():
    return construction.build_default()


@pytest.fixture(scope="session")
def data(cg):
    return audit.constructive_data(cg)


@pytest.fixture(scope="session")
def g128_table(cg):
    return dixon_table(cg.group)


@pytest.fixture(scope="session")
def g128_fusion(g128_table):
    return fusion_tensor(g128_table)


@pytest.fixture(scope="session")
def q8():
    return q8_group()


@pytest.fixture(scope="session")
def q8_table(q8):
    return dixon_table(q8)


@pytest.fixture(scope="session")
def h16():
    return elementary_abelian_16()


@pytest.fixture(scope="session")
def h16_table(h16):
    return dixon_table(h16)
