import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from olie import GF
from olie import catalog


@pytest.fixture
def s4():
    return catalog.builtin_algebra("omega.s4")


@pytest.fixture
def n3():
    return catalog.builtin_algebra("omega.n3")


@pytest.fixture
def sl2():
    return catalog.builtin_algebra("lie.sl2")


@pytest.fixture
def aff1():
    return catalog.builtin_algebra("lie.aff1")


@pytest.fixture
def sl2e():
    return catalog.builtin_algebra("omega.sl2e")


@pytest.fixture
def gf5():
    return GF(5)
