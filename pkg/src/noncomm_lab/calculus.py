"""Discrete differential operators on weighted graphs.

Conventions, fixed once here and relied on everywhere else:

* gradient(f, x, y) = f(y) - f(x), defined for any ordered pair.
* The Laplacian is mu-normalized: (1/mu_x) * sum over neighbors of
  (f(y) - f(x)) * sigma_xy.
* dirichlet_energy returns the ORDERED-pair sum, i.e. twice the sum over
  unordered edges.
* Green's formula orients boundary gradients outward: f(outside) - f(inside).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import IsolatedVertexError
from .graphs import WeightedGraph, normalize_subset, oriented_boundary

VertexFunction = Sequence[float]


def _check_function(graph: WeightedGraph, f: VertexFunction) -> None:
    if len(f) != graph.vertex_count:
        raise ValueError(f"function length {len(f)} != vertex count {graph.vertex_count}")
    for v in f:
        if not math.isfinite(v):
            raise ValueError("vertex function values must be finite")


def support(f: VertexFunction) -> frozenset[int]:
    """The set where |f| > 0."""
    return frozenset(x for x, v in enumerate(f) if v != 0)


def gradient(f: VertexFunction, x: int, y: int) -> float:
    """f(y) - f(x)."""
    return f[y] - f[x]


def laplacian(graph: WeightedGraph, f: VertexFunction) -> list[float]:
    """mu-normalized Laplacian of f at every vertex."""
    _check_function(graph, f)
    out = []
    for x in range(graph.vertex_count):
        if graph.mu[x] == 0:
            raise IsolatedVertexError(f"vertex {x} has mu = 0")
        acc = sum((f[y] - f[x]) * graph.edge_weight(x, y) for y in graph.neighbors[x])
        out.append(acc / graph.mu[x])
    return out


def check_green(graph: WeightedGraph, f: VertexFunction, omega: Iterable[int]) -> float:
    """Absolute residual of the discrete Green's formula on omega.

    Compares sum over omega of (Laplacian f) * mu against the outward
    boundary flux sum of (f(out) - f(in)) * sigma.
    """
    s = normalize_subset(graph, omega)
    lap = laplacian(graph, f)
    lhs = sum(lap[x] * graph.mu[x] for x in s)
    rhs = sum((f[out] - f[inn]) * graph.edge_weight(inn, out) for inn, out in oriented_boundary(graph, s))
    return abs(lhs - rhs)


def check_summation_by_parts(graph: WeightedGraph, f: VertexFunction, g: VertexFunction) -> float:
    """Absolute residual between the vertex-sum and edge-sum pairings.

    Vertex form: sum of (Laplacian f)(x) g(x) mu_x.
    Edge form: minus the sum over unordered edges of (grad f)(grad g) sigma.
    """
    _check_function(graph, g)
    lap = laplacian(graph, f)
    lhs = sum(lap[x] * g[x] * graph.mu[x] for x in range(graph.vertex_count))
    rhs = -sum(
        (f[v] - f[u]) * (g[v] - g[u]) * w for (u, v), w in graph.sigma.items()
    )
    return abs(lhs - rhs)


def dirichlet_energy(graph: WeightedGraph, f: VertexFunction, p: float = 2.0) -> float:
    """Ordered-pair energy: sum over adjacent ordered pairs of |grad f|^p sigma.

    Equals 2x the corresponding sum over unordered edges.
    """
    if p < 1:
        raise ValueError("exponent p must be >= 1")
    _check_function(graph, f)
    return 2.0 * sum(abs(f[v] - f[u]) ** p * w for (u, v), w in graph.sigma.items())


def lp_norm(graph: WeightedGraph, f: VertexFunction, p: float, unweighted: bool = False) -> float:
    """(sum |f(x)|^p mu_x)^(1/p); with unweighted=True the mu_x are dropped."""
    if p < 1:
        raise ValueError("exponent p must be >= 1")
    _check_function(graph, f)
    if unweighted:
        total = sum(abs(v) ** p for v in f)
    else:
        total = sum(abs(v) ** p * m for v, m in zip(f, graph.mu))
    return total ** (1.0 / p)
