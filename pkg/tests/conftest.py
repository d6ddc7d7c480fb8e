import pytest

from isoset import enumerate_all, enumerate_connected


@pytest.fixture(scope="session")
def connected_catalog():
    """Connected graphs up to isomorphism, keyed by order; computed once."""
    return {n: list(enumerate_connected(n)) for n in range(1, 9)}


@pytest.fixture(scope="session")
def all_graphs_to_7():
    """Every graph (disconnected included) up to isomorphism, n <= 7."""
    return {n: list(enumerate_all(n)) for n in range(1, 8)}
