"""Shared fixtures and independent brute-force oracles.

The oracle helpers here deliberately avoid the library's own code paths:
distances via Floyd-Warshall, triangle and common-neighbour counts via
direct enumeration, determinants via Bareiss elimination.  Expected values
frozen into tests were computed with these.
"""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np
import pytest

from dezakit import families
from dezakit.graphs import Graph, bipartite_double, disjoint_union, line_graph


# ---------------------------------------------------------------------------
# oracles


def brute_common_neighbours(g: Graph, u: int, v: int) -> int:
    return sum(1 for w in range(g.n) if g.adj[u, w] and g.adj[v, w])


def brute_triangles(g: Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.adj[a, b] and g.adj[a, c] and g.adj[b, c]
    )


def brute_distances(g: Graph) -> np.ndarray:
    big = 10**6
    dist = np.full((g.n, g.n), big, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    dist[g.adj.astype(bool)] = 1
    for k in range(g.n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    dist[dist >= big] = -1
    return dist


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    a = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                a[u, v] = a[v, u] = 1
    return Graph(a)


# ---------------------------------------------------------------------------
# named graphs (session-scoped; everything downstream is cached anyway)


@pytest.fixture(scope="session")
def octahedron_lg():
    return families.octahedron_line_graph()


@pytest.fixture(scope="session")
def heawood():
    return families.heawood()


@pytest.fixture(scope="session")
def icosahedron():
    return families.icosahedron()


@pytest.fixture(scope="session")
def petersen():
    return families.petersen()


@pytest.fixture(scope="session")
def johnson63():
    return families.johnson(6, 3)


@pytest.fixture(scope="session")
def line_petersen(petersen):
    return line_graph(petersen)


@pytest.fixture(scope="session")
def taylor13():
    return families.taylor_double_cover(families.paley(13))


@pytest.fixture(scope="session")
def klein24():
    return families.bundled_graph("klein24")


@pytest.fixture(scope="session")
def biplane():
    return families.biplane11()


@pytest.fixture(scope="session")
def cube():
    return families.trivial_design_incidence(3)


@pytest.fixture(scope="session")
def desargues(petersen):
    return bipartite_double(petersen)


@pytest.fixture(scope="session")
def c5():
    return families.cycle(5)


@pytest.fixture(scope="session")
def c6():
    return families.cycle(6)


@pytest.fixture(scope="session")
def c7():
    return families.cycle(7)


@pytest.fixture(scope="session")
def k444():
    return families.complete_multipartite([4, 4, 4])


@pytest.fixture(scope="session")
def two_k33():
    return disjoint_union([families.complete_multipartite([3, 3])] * 2)
