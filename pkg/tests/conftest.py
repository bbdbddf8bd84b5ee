import random

import pytest

from msetdim.catalog import connected_graphs_upto
from msetdim.graph import from_edge_list


def random_graph(rng: random.Random, n: int, p: float, connected: bool = False):
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    if connected:
        order = list(range(n))
        rng.shuffle(order)
        for k in range(1, n):
            u, v = order[k], order[rng.randrange(k)]
            edges.add((min(u, v), max(u, v)))
    return from_edge_list(n, sorted(edges))


def random_pairs(seed: int, count: int, n_max: int = 12):
    """Seeded (connected graph, landmark set) pairs with 1 <= n <= n_max."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.8]), connected=True)
        S = sorted(rng.sample(range(n), rng.randint(0, n)))
        out.append((g, S))
    return out


@pytest.fixture(scope="session")
def catalog6():
    return connected_graphs_upto(6)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
