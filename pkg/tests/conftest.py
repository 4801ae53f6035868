import random

import pytest

from noncomm_lab import build_group, from_edges, noncommuting_graph

# every nonabelian group of order <= 32 in the built-in families
NONABELIAN_SPECS_LE_32 = [
    "Q8", "D3", "D4", "D5", "D6", "D7", "D8", "S3", "S4", "A4",
    "Q8xC2", "D3xC2", "D4xC2", "D5xC2", "D6xC2", "D7xC2", "D8xC2",
    "S3xC2", "A4xC2",
]


@pytest.fixture(scope="session")
def q8_graph():
    return noncommuting_graph(build_group("Q8"))


@pytest.fixture(scope="session")
def s3_graph():
    return noncommuting_graph(build_group("S3"))


@pytest.fixture(scope="session")
def small_gamma_graphs():
    """Noncommuting graphs of the built-in nonabelian groups, order <= 32."""
    out = {}
    for spec in NONABELIAN_SPECS_LE_32:
        out[spec] = noncommuting_graph(build_group(spec))
    return out


def make_random_graph(rng: random.Random, n_min=4, n_max=10, weighted=True):
    """A random connected graph: spanning tree plus extra edges."""
    n = rng.randint(n_min, n_max)
    edges = []
    seen = set()
    for v in range(1, n):
        u = rng.randrange(v)
        seen.add((u, v))
        edges.append((u, v, rng.uniform(0.5, 2.0) if weighted else 1.0))
    for _ in range(rng.randint(0, 2 * n)):
        u, v = sorted(rng.sample(range(n), 2))
        if (u, v) not in seen:
            seen.add((u, v))
            edges.append((u, v, rng.uniform(0.5, 2.0) if weighted else 1.0))
    return from_edges(n, edges)
