import pytest

from cyclodiff import init_app
from cyclodiff.config import TestConfig
from cyclodiff.field import build_context
from cyclodiff.ring import normalize_generator


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="Run slow tests (harvest to 5·10⁵, derivation of all 48 tables, scans to 10⁵)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="slow test; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def config():
    return init_app(TestConfig, testing=True)


@pytest.fixture
def ctx7():
    """F_7 with g = 3, order 2"""
    return build_context(7, 2, 3)


@pytest.fixture
def ctx5():
    """F_5 with g = 2, order 2"""
    return build_context(5, 2, 2)


@pytest.fixture(scope="session")
def ctx73():
    return normalize_generator(73)


@pytest.fixture(scope="session")
def ctx97():
    return normalize_generator(97)
