import pytest
from hypothesis import strategies as st

from anclab.services.scheme.forest import validate_forest
from anclab.services.scheme.params import build_params


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run full-size acceptance runs")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size acceptance run, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def p16_2():
    return build_params(16, 2)


@pytest.fixture
def p2_2():
    return build_params(2, 2)


@pytest.fixture
def p3_2():
    return build_params(3, 2)


@pytest.fixture
def two_node_tree():
    return validate_forest([0, 1], 2)


@pytest.fixture
def star3():
    return validate_forest([0, 1, 1], 2)


@st.composite
def parent_arrays(draw, max_n=40):
    """Parent arrays where every parent precedes its child (any forest shape)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    return [draw(st.integers(min_value=0, max_value=v - 1)) for v in range(1, n + 1)]


def depth_of(parents):
    depth = [0] * (len(parents) + 1)
    for v, p in enumerate(parents, start=1):
        depth[v] = depth[p] + 1 if p else 1
    return max(depth[1:], default=1)
