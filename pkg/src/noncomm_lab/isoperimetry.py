"""Directed vertex weights, the ratio nu_r, the P(delta, iota, R0)
certificate, closed-form isoperimetric constants, and brute-force
verification of the isoperimetric inequality over vertex subsets.

The P certificate checks, for a potential family q_xi (default: half the
squared hop distance), the conditions

  (i)    |grad rho_xi| <= 1 over all adjacent pairs,
  (ii.1) q_xi >= 0 with equality exactly at xi,
  (ii.2) |grad q_xi| <= rho_xi(x) + iota over ordered pairs in B_xi(R0),
  (ii.3) 2 * mu_x * Laplacian(q_xi)(x) >= delta on B_xi(R0),
  (iii)  n = delta * nu_{R0+1} >= 1.

Condition (ii.3) is the weight-normalized form: the raw Laplacian bound is
delta / (2 * mu_x).  Condition (i) quantifies over edges only; along
non-edges the gradient of rho never enters any of the inequalities.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .calculus import laplacian
from .errors import (
    BudgetExceededError,
    DimensionTooSmallError,
    NoAdmissiblePairError,
    UnreachableVertexError,
)
from .graphs import INFINITE, WeightedGraph, graph_distance

EXHAUSTIVE_VERTEX_CAP = 24


def mu_directed(graph: WeightedGraph, xi: int, x: int) -> float:
    """Sum of sigma over neighbors of x strictly closer to xi than x is."""
    dist = graph_distance(graph, xi)
    if dist[x] == INFINITE:
        raise UnreachableVertexError(f"vertex {x} unreachable from {xi}")
    return sum(graph.edge_weight(x, y) for y in graph.neighbors[x] if dist[y] < dist[x])


def nu(graph: WeightedGraph, r: float) -> float:
    """inf of mu_x / mu^xi_x over xi in V and x in the strict ball B_xi(r).

    Pairs with mu^xi_x = 0 (notably x = xi) contribute +inf to the infimum
    and are skipped; if every pair is of that kind NoAdmissiblePairError is
    raised.
    """
    if r <= 0:
        raise ValueError("radius must be positive")
    best = INFINITE
    for xi in range(graph.vertex_count):
        dist = graph_distance(graph, xi)
        for x in range(graph.vertex_count):
            if dist[x] >= r:
                continue
            directed = sum(
                graph.edge_weight(x, y) for y in graph.neighbors[x] if dist[y] < dist[x]
            )
            if directed > 0:
                best = min(best, graph.mu[x] / directed)
    if best == INFINITE:
        raise NoAdmissiblePairError(f"no pair with positive directed weight in balls of radius {r}")
    return best


# ---------------------------------------------------------------------------
# P certificate


@dataclass
class PCertificate:
    delta: float
    iota: float
    R0: float
    nu_R0_plus_1: float
    n: float
    condition_results: dict  # item name -> bool
    witnesses: dict = field(default_factory=dict)  # item name -> violating tuple

    @property
    def passed(self) -> bool:
        return all(self.condition_results.values())

    def to_json_dict(self) -> dict:
        return {
            "delta": self.delta,
            "iota": self.iota,
            "R0": self.R0,
            "nu_R0_plus_1": self.nu_R0_plus_1,
            "n": self.n,
            "condition_results": dict(self.condition_results),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "passed": self.passed,
            "conventions": {
                "balls": "strict hop distance < r",
                "condition_i_range": "all xi, adjacent pairs",
                "condition_ii3_form": "2*mu_x*Laplacian(q_xi)(x) >= delta",
            },
        }


def default_potential(graph: WeightedGraph, xi: int) -> list[float]:
    """Half the squared hop distance from xi."""
    return [d * d / 2.0 for d in graph_distance(graph, xi)]


def check_P(
    graph: WeightedGraph,
    delta: float,
    iota: float,
    R0: float,
    q: Optional[Callable[[WeightedGraph, int], Sequence[float]]] = None,
) -> PCertificate:
    """Evaluate the P(delta, iota, R0) conditions exhaustively.

    Failures are recorded in the certificate (with a witness triple), never
    raised.  ``q`` maps (graph, xi) to a vertex function; by default half the
    squared distance to xi.
    """
    if q is None:
        q = default_potential
    results = {"i": True, "ii.1": True, "ii.2": True, "ii.3": True, "iii": True}
    witnesses: dict = {}

    for xi in range(graph.vertex_count):
        dist = graph_distance(graph, xi)
        q_xi = list(q(graph, xi))
        ball_members = [x for x in range(graph.vertex_count) if dist[x] < R0]

        if results["i"]:
            for u, v in graph.sigma:
                if abs(dist[v] - dist[u]) > 1:
                    results["i"] = False
                    witnesses["i"] = (xi, u, v)
                    break

        if results["ii.1"]:
            for x in range(graph.vertex_count):
                ok = q_xi[x] >= 0 and ((q_xi[x] == 0) == (x == xi))
                if not ok:
                    results["ii.1"] = False
                    witnesses["ii.1"] = (xi, x)
                    break

        if results["ii.2"]:
            for x in ball_members:
                for y in ball_members:
                    if abs(q_xi[y] - q_xi[x]) > dist[x] + iota:
                        results["ii.2"] = False
                        witnesses["ii.2"] = (xi, x, y)
                        break
                if not results["ii.2"]:
                    break

        if results["ii.3"] and ball_members:
            lap_q = laplacian(graph, q_xi)
            for x in ball_members:
                if 2.0 * graph.mu[x] * lap_q[x] < delta:
                    results["ii.3"] = False
                    witnesses["ii.3"] = (xi, x)
                    break

    try:
        nu_val = nu(graph, R0 + 1)
    except NoAdmissiblePairError:
        nu_val = INFINITE
    n = delta * nu_val
    if not n >= 1:
        results["iii"] = False
        witnesses["iii"] = (delta, nu_val)
    return PCertificate(delta, iota, R0, nu_val, n, results, witnesses)


# ---------------------------------------------------------------------------
# isoperimetric constant and verification


def constant_c(
    omega: float,
    omega_prime: float,
    nu_val: float,
    iota: float,
    n: float,
    variant: str = "general",
) -> float:
    """Closed-form lower isoperimetric constant.

    variant "general": omega' * omega^(1/(n-1)) / (4^(n+3) * nu * iota * e^(2n)).
    variant "gamma_g" (unit-weight noncommuting graphs, n = nu_2):
    omega^(1 - 1/n) / (4^(n+3) * n * e^(2n)).
    """
    if n <= 1:
        raise DimensionTooSmallError(f"constant requires n > 1, got {n}")
    if variant == "general":
        return omega_prime * omega ** (1.0 / (n - 1)) / (4.0 ** (n + 3) * nu_val * iota * math.e ** (2 * n))
    if variant == "gamma_g":
        return omega ** (1.0 - 1.0 / n) / (4.0 ** (n + 3) * n * math.e ** (2 * n))
    raise ValueError(f"unknown variant {variant!r}")


@dataclass
class IsoReport:
    c: float
    n: float
    omega_min_vertex_weight: float
    omega_prime_min_edge_weight: float
    worst_subset: tuple
    worst_ratio: float
    subsets_checked: int
    mode: str
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "c": self.c,
            "n": self.n,
            "omega_min_vertex_weight": self.omega_min_vertex_weight,
            "omega_prime_min_edge_weight": self.omega_prime_min_edge_weight,
            "worst_subset": list(self.worst_subset),
            "worst_ratio": self.worst_ratio,
            "subsets_checked": self.subsets_checked,
            "mode": self.mode,
            "violations": self.violations,
            "passed": self.passed,
            "conventions": {
                "subsets": "proper nonempty subsets only",
                "boundary_measure": "sigma over unordered boundary edges",
            },
        }


def _subset_masks(
    graph: WeightedGraph, mode: str, sample_count: int, seed: Optional[int]
) -> Iterator[int]:
    n = graph.vertex_count
    full = (1 << n) - 1
    if mode == "exhaustive":
        if n > EXHAUSTIVE_VERTEX_CAP:
            raise BudgetExceededError(
                f"exhaustive subset enumeration capped at {EXHAUSTIVE_VERTEX_CAP} vertices"
            )
        yield from range(1, full)
    elif mode == "sampled":
        seen = set()
        for x in range(n):  # singletons and their complements
            for mask in (1 << x, full ^ (1 << x)):
                if 0 < mask < full and mask not in seen:
                    seen.add(mask)
                    yield mask
        rng = random.Random(seed)
        for _ in range(sample_count):
            mask = rng.randrange(1, full)
            if mask not in seen:
                seen.add(mask)
                yield mask
    else:
        raise ValueError(f"unknown mode {mode!r}")


def _boundary_and_mass(graph: WeightedGraph, mask: int, adj_masks: list[int]) -> tuple[float, float]:
    sigma_boundary = 0.0
    mu_omega = 0.0
    unit = graph.is_unit_weighted()
    m = mask
    while m:
        x = (m & -m).bit_length() - 1
        m &= m - 1
        mu_omega += graph.mu[x]
        outside = adj_masks[x] & ~mask
        if unit:
            sigma_boundary += outside.bit_count()
        else:
            o = outside
            while o:
                y = (o & -o).bit_length() - 1
                o &= o - 1
                sigma_boundary += graph.edge_weight(x, y)
    return sigma_boundary, mu_omega


def _adjacency_masks(graph: WeightedGraph) -> list[int]:
    return [sum(1 << y for y in graph.neighbors[x]) for x in range(graph.vertex_count)]


def verify_isoperimetric(
    graph: WeightedGraph,
    c: float,
    n: float,
    mode: str = "exhaustive",
    sample_count: int = 1000,
    seed: Optional[int] = None,
) -> IsoReport:
    """Check sigma(boundary) >= c * mu(Omega)^(1 - 1/n) over proper nonempty
    subsets Omega, exhaustively or on a seeded sample.

    The full set and the empty set are excluded: the boundary of V is empty,
    so the inequality cannot hold there on any finite graph.
    """
    adj_masks = _adjacency_masks(graph)
    exponent = 1.0 - 1.0 / n
    worst_ratio = INFINITE
    worst_mask = 0
    violations = []
    checked = 0
    for mask in _subset_masks(graph, mode, sample_count, seed):
        checked += 1
        sb, mo = _boundary_and_mass(graph, mask, adj_masks)
        rhs = c * mo**exponent
        ratio = sb / mo**exponent
        if ratio < worst_ratio:
            worst_ratio = ratio
            worst_mask = mask
        if sb < rhs - 1e-12 * (1.0 + abs(rhs)):
            violations.append(
                {"subset": _mask_to_list(mask), "sigma_boundary": sb, "rhs": rhs}
            )
    return IsoReport(
        c=c,
        n=n,
        omega_min_vertex_weight=graph.min_vertex_weight(),
        omega_prime_min_edge_weight=graph.min_edge_weight(),
        worst_subset=tuple(_mask_to_list(worst_mask)),
        worst_ratio=worst_ratio,
        subsets_checked=checked,
        mode=mode,
        violations=violations,
    )


def empirical_iso_constant(
    graph: WeightedGraph,
    n: float,
    mode: str = "exhaustive",
    sample_count: int = 1000,
    seed: Optional[int] = None,
) -> float:
    """min over proper nonempty Omega of sigma(boundary) / mu(Omega)^(1-1/n)."""
    adj_masks = _adjacency_masks(graph)
    exponent = 1.0 - 1.0 / n
    best = INFINITE
    for mask in _subset_masks(graph, mode, sample_count, seed):
        sb, mo = _boundary_and_mass(graph, mask, adj_masks)
        best = min(best, sb / mo**exponent)
    return best


def _mask_to_list(mask: int) -> list[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out
