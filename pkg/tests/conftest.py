import os

import pytest

from algmod.exactla import field
from algmod.globals import globals
from algmod.modrep import groups
from algmod.modrep import textio


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow acceptance tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: expensive acceptance run, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def fixture_path(name: str) -> str:
    return os.path.join(globals.FIXTURE_DIR, name)


@pytest.fixture
def gf2():
    return field.field_make(2)


@pytest.fixture
def gf3():
    return field.field_make(3)


@pytest.fixture
def gf5():
    return field.field_make(5)


@pytest.fixture
def gf9():
    return field.field_default(3, 2)


@pytest.fixture
def c3():
    return groups.GroupSpec.from_permutations([(1, 2, 0)])


@pytest.fixture
def v4():
    return textio.load_permutations(fixture_path("v4.perm"))


@pytest.fixture
def c3c3():
    return textio.load_permutations(fixture_path("c3c3.perm"))


@pytest.fixture
def c5c5():
    return textio.load_permutations(fixture_path("c5c5.perm"))


@pytest.fixture
def m2_c3c3():
    return textio.load_module(fixture_path("m2_c3c3.mod"))


@pytest.fixture
def sl32():
    return textio.load_module(fixture_path("sl32.mod"))
