from __future__ import annotations

import pytest

from ldlab import Scope
from ldlab.instances import (gen_group_hopf, gen_lukasiewicz,
                             gen_matrix_compact)


@pytest.fixture(scope="session")
def l3():
    return gen_lukasiewicz(3)


@pytest.fixture(scope="session")
def gh22():
    return gen_group_hopf(2, 2)


@pytest.fixture(scope="session")
def gh33():
    return gen_group_hopf(3, 3)


@pytest.fixture(scope="session")
def mat22():
    return gen_matrix_compact(2, 2)


@pytest.fixture
def small_scope():
    """Dims 1 and 2 only: keeps Kronecker sizes manageable in exact mode."""
    return Scope(objects=(1, 2))
