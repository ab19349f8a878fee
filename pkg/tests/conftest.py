import pathlib

import pytest

from leavitt import graph_from

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="session")
def e2():
    """One vertex, two loops: every infinite path is a boundary point."""
    return graph_from(["v"], [("e1", "v", "v"), ("e2", "v", "v")])


@pytest.fixture(scope="session")
def loop():
    """A single loop with no exit."""
    return graph_from(["v"], [("c", "v", "v")])


@pytest.fixture(scope="session")
def t3():
    """Source -> looped middle -> sink; the sink is singular."""
    return graph_from(["u", "v", "w"],
                      [("a", "u", "v"), ("b", "v", "v"), ("c", "v", "w")])


@pytest.fixture(scope="session")
def ie():
    """Flagged infinite emitter with two listed edges; no regular vertex."""
    return graph_from(["v", "w"], [("e1", "v", "v"), ("e2", "v", "w")],
                      infinite_emitters=["v"])
