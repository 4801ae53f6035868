"""Weighted undirected graphs: measures, boundaries, distances, balls.

Edges are stored once, as unordered pairs (u, v) with u < v, each carrying a
strictly positive weight sigma.  The vertex weight mu_x is the sum of sigma
over edges incident to x (the degree when all weights are 1).  Ordered-pair
sums used elsewhere are obtained from these via an explicit factor 2.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import AbelianGroupError, BudgetExceededError
from .groups import FiniteGroup, center, commutes

INFINITE = math.inf

HAMILTONIAN_VERTEX_CAP = 24

Edge = tuple[int, int]


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable weighted graph.  Build via :func:`from_edges`."""

    vertex_count: int
    neighbors: tuple[tuple[int, ...], ...]
    sigma: dict  # (u, v) with u < v -> weight > 0
    mu: tuple[float, ...]
    vertex_labels: tuple[str, ...]

    def edges(self) -> list[Edge]:
        return sorted(self.sigma)

    def edge_count(self) -> int:
        return len(self.sigma)

    def edge_weight(self, u: int, v: int) -> float:
        return self.sigma[(u, v) if u < v else (v, u)]

    def degree(self, x: int) -> int:
        return len(self.neighbors[x])

    def min_vertex_weight(self) -> float:
        """The quantity usually called omega: inf of mu over vertices."""
        return min(self.mu)

    def min_edge_weight(self) -> float:
        """The quantity usually called omega': inf of sigma over edges."""
        return min(self.sigma.values())

    def is_unit_weighted(self) -> bool:
        return all(w == 1 for w in self.sigma.values())


def from_edges(
    vertex_count: int,
    edges: Iterable[tuple[int, int] | tuple[int, int, float]],
    labels: Optional[Sequence[str]] = None,
) -> WeightedGraph:
    """Build a graph from (u, v) or (u, v, sigma) tuples; default sigma 1."""
    sigma: dict[Edge, float] = {}
    adj: list[set[int]] = [set() for _ in range(vertex_count)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        w = float(e[2]) if len(e) > 2 else 1.0
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range")
        if w <= 0:
            raise ValueError(f"nonpositive weight {w} on edge ({u},{v})")
        key = (u, v) if u < v else (v, u)
        if key in sigma:
            raise ValueError(f"duplicate edge {key}")
        sigma[key] = w
        adj[u].add(v)
        adj[v].add(u)
    mu = tuple(sum(sigma[(min(x, y), max(x, y))] for y in adj[x]) for x in range(vertex_count))
    if labels is None:
        labels = tuple(str(i) for i in range(vertex_count))
    return WeightedGraph(vertex_count, tuple(tuple(sorted(a)) for a in adj), sigma, mu, tuple(labels))


def noncommuting_graph(g: FiniteGroup) -> WeightedGraph:
    """The graph on noncentral elements of g, joining noncommuting pairs.

    All edge weights are 1.  Raises AbelianGroupError when the group has no
    noncentral elements.
    """
    z = center(g)
    vertices = [a for a in range(g.order) if a not in z]
    if not vertices:
        raise AbelianGroupError(f"{g.name} is abelian; its noncommuting graph is empty")
    pos = {a: i for i, a in enumerate(vertices)}
    edges = [
        (pos[a], pos[b])
        for i, a in enumerate(vertices)
        for b in vertices[i + 1 :]
        if not commutes(g, a, b)
    ]
    return from_edges(len(vertices), edges, labels=[g.labels[a] for a in vertices])


# ---------------------------------------------------------------------------
# subsets, boundaries, measures


def normalize_subset(graph: WeightedGraph, omega: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(x) for x in omega)
    for x in s:
        if not (0 <= x < graph.vertex_count):
            raise ValueError(f"vertex {x} out of range")
    return s


def boundary(graph: WeightedGraph, omega: Iterable[int]) -> frozenset[Edge]:
    """Edges with exactly one endpoint inside omega."""
    s = normalize_subset(graph, omega)
    return frozenset(e for e in graph.sigma if (e[0] in s) != (e[1] in s))


def oriented_boundary(graph: WeightedGraph, omega: Iterable[int]) -> list[Edge]:
    """Boundary edges as (inside, outside) ordered pairs."""
    s = normalize_subset(graph, omega)
    out = []
    for u, v in graph.sigma:
        if (u in s) != (v in s):
            out.append((u, v) if u in s else (v, u))
    return sorted(out)


def sigma_measure(graph: WeightedGraph, edges: Iterable[Edge]) -> float:
    """Total sigma weight of a set of unordered edges, each counted once."""
    return sum(graph.edge_weight(u, v) for u, v in edges)


def mu_measure(graph: WeightedGraph, omega: Iterable[int]) -> float:
    """Total mu weight of a vertex subset."""
    return sum(graph.mu[x] for x in normalize_subset(graph, omega))


# ---------------------------------------------------------------------------
# distances, balls, connectivity


def graph_distance(graph: WeightedGraph, xi: int) -> list[float]:
    """Hop-count distances from xi; unreachable vertices get math.inf.

    Distances ignore sigma: they count edges of a shortest path.
    """
    dist = [INFINITE] * graph.vertex_count
    dist[xi] = 0
    queue = deque([xi])
    while queue:
        x = queue.popleft()
        for y in graph.neighbors[x]:
            if dist[y] == INFINITE:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def ball(graph: WeightedGraph, xi: int, r: float) -> frozenset[int]:
    """Vertices at distance strictly less than r from xi."""
    if r <= 0:
        raise ValueError("ball radius must be positive")
    dist = graph_distance(graph, xi)
    return frozenset(x for x in range(graph.vertex_count) if dist[x] < r)


def is_connected(graph: WeightedGraph) -> bool:
    if graph.vertex_count == 0:
        return True
    return INFINITE not in graph_distance(graph, 0)


def diameter(graph: WeightedGraph) -> float:
    """Max hop distance over all pairs; math.inf when disconnected."""
    best = 0.0
    for xi in range(graph.vertex_count):
        d = max(graph_distance(graph, xi))
        if d == INFINITE:
            return INFINITE
        best = max(best, d)
    return best


def hamiltonian_cycle(graph: WeightedGraph) -> Optional[list[int]]:
    """A Hamiltonian cycle found by exhaustive backtracking, or None.

    Raises BudgetExceededError above HAMILTONIAN_VERTEX_CAP vertices.
    """
    n = graph.vertex_count
    if n > HAMILTONIAN_VERTEX_CAP:
        raise BudgetExceededError(f"hamiltonian search capped at {HAMILTONIAN_VERTEX_CAP} vertices")
    if n == 0:
        return None
    if n == 1:
        return [0]
    adj = [set(a) for a in graph.neighbors]
    path = [0]
    used = [False] * n
    used[0] = True

    def extend() -> bool:
        if len(path) == n:
            return 0 in adj[path[-1]]
        for y in graph.neighbors[path[-1]]:
            if not used[y]:
                used[y] = True
                path.append(y)
                if extend():
                    return True
                path.pop()
                used[y] = False
        return False

    return list(path) if extend() else None


# ---------------------------------------------------------------------------
# export


def to_dot(graph: WeightedGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for x in range(graph.vertex_count):
        lines.append(f'  v{x} [label="{graph.vertex_labels[x]}"];')
    for u, v in graph.edges():
        w = graph.edge_weight(u, v)
        attr = "" if w == 1 else f' [weight={w}, label="{w}"]'
        lines.append(f"  v{u} -- v{v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(graph: WeightedGraph) -> dict:
    return {
        "vertices": [
            {"id": x, "label": graph.vertex_labels[x]} for x in range(graph.vertex_count)
        ],
        "edges": [
            {"u": u, "v": v, "sigma": graph.edge_weight(u, v)} for u, v in graph.edges()
        ],
    }


def to_json(graph: WeightedGraph) -> str:
    return json.dumps(to_json_dict(graph), indent=2)
