import random

import pytest

from mostar import build_graph, generate_connected


def pytest_addoption(parser):
    parser.addoption(
        "--run-optional",
        action="store_true",
        default=False,
        help="run long optional checks (order-10 census)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-optional"):
        return
    skip = pytest.mark.skip(reason="optional long-running check; use --run-optional")
    for item in items:
        if "optional" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def census():
    """Materialized census per order, shared across the whole session."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(generate_connected(n))
        return cache[n]

    return get


def random_connected_graph(rng: random.Random, n: int):
    """Random spanning tree plus a few extra edges; always connected."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(rng.randrange(0, n + 1)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.append((min(u, v), max(u, v)))
    return build_graph(n, edges)


@pytest.fixture(scope="session")
def make_random_connected():
    return random_connected_graph
