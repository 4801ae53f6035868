"""Sobolev and Nash type inequalities and the dyadic-truncation machinery
linking them.

Three inequality shapes are checked numerically for a function f on a
weighted graph, with n > 2 and p = 2n/(n-2):

* "flat":  C(n,p) * (grad p-energy)^(1/p) + c*K(Omega0) * ||f||_p
           >= (c / 2^(1+1/n-1/p)) * unweighted ell^(np/(n-p)) norm of f.
* "dagger":  (sum |f|^p mu)^(2/p) <= A * (ordered-pair grad 2-energy).
* "double_dagger":  (sum |f|^2 mu)^(1+2/n)
           <= B * (grad 2-energy) * (sum |f| mu)^(4/n).

The dyadic decomposition clamps |f| between consecutive powers of two; the
chain verifier walks every estimate tying double_dagger on the truncations
back to dagger on f, with the constant relation
A = (2^p - 1)^(2/p) * 2^(2(p-1)) * B.

All inequality checks use additive slack TOL * (1 + |rhs|); a near-zero rhs
makes the ratio field None instead of dividing.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .calculus import VertexFunction, dirichlet_energy, lp_norm, support
from .errors import ExponentRangeError, NoFiniteCError, SobolevExponentUndefinedError
from .graphs import WeightedGraph, mu_measure

TOL = 1e-12


def _holds(lhs: float, rhs: float) -> bool:
    return lhs <= rhs + TOL * (1.0 + abs(rhs))


def _ratio(lhs: float, rhs: float) -> Optional[float]:
    return lhs / rhs if abs(rhs) > TOL else None


def p_from_n(n: float) -> float:
    """The critical exponent 2n/(n-2); requires n > 2."""
    if n <= 2:
        raise SobolevExponentUndefinedError(f"p = 2n/(n-2) undefined for n = {n}")
    return 2.0 * n / (n - 2.0)


def k_factor(mu_omega0: float, v0: float, n: float) -> float:
    """0 when mu(Omega0) <= v0, else mu(Omega0)^(1-1/n) / v0."""
    if mu_omega0 <= v0:
        return 0.0
    return mu_omega0 ** (1.0 - 1.0 / n) / v0


@dataclass
class InequalityReport:
    inequality: str  # flat | dagger | double_dagger
    lhs: float
    rhs: float
    ratio: Optional[float]
    holds: bool
    constants_used: dict
    witness_function: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "inequality": self.inequality,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "holds": self.holds,
            "constants_used": dict(self.constants_used),
            "witness_function": self.witness_function,
        }


# ---------------------------------------------------------------------------
# direct inequality checks


def check_sobolev_flat(
    graph: WeightedGraph,
    f: VertexFunction,
    c: float,
    n: float,
    p: float,
    v0: float,
    C_np: float,
    label: Optional[str] = None,
) -> InequalityReport:
    """The flat Sobolev inequality; holds means lhs <= rhs where lhs is the
    critical-norm side and rhs the gradient + volume-correction side.

    The critical norm carries no mu weights (the other norms do).
    """
    if p >= n:
        raise ExponentRangeError(f"flat inequality needs p < n, got p={p}, n={n}")
    grad_term = C_np * dirichlet_energy(graph, f, p) ** (1.0 / p)
    k_val = k_factor(mu_measure(graph, support(f)), v0, n)
    mass_term = c * k_val * lp_norm(graph, f, p)
    q = n * p / (n - p)
    lhs = c / 2.0 ** (1.0 + 1.0 / n - 1.0 / p) * lp_norm(graph, f, q, unweighted=True)
    rhs = grad_term + mass_term
    return InequalityReport(
        "flat",
        lhs,
        rhs,
        _ratio(lhs, rhs),
        _holds(lhs, rhs),
        {"c": c, "n": n, "p": p, "v0": v0, "C_np": C_np, "K": k_val},
        label,
    )


def check_dagger(
    graph: WeightedGraph, f: VertexFunction, n: float, A: float, label: Optional[str] = None
) -> InequalityReport:
    """(sum |f|^p mu)^(2/p) <= A * ordered-pair Dirichlet energy."""
    p = p_from_n(n)
    lhs = lp_norm(graph, f, p) ** 2
    rhs = A * dirichlet_energy(graph, f, 2.0)
    return InequalityReport(
        "dagger", lhs, rhs, _ratio(lhs, rhs), _holds(lhs, rhs), {"n": n, "p": p, "A": A}, label
    )


def check_double_dagger(
    graph: WeightedGraph, f: VertexFunction, n: float, B: float, label: Optional[str] = None
) -> InequalityReport:
    """(sum |f|^2 mu)^(1+2/n) <= B * Dirichlet energy * (sum |f| mu)^(4/n)."""
    p = p_from_n(n)
    lhs = (lp_norm(graph, f, 2.0) ** 2) ** (1.0 + 2.0 / n)
    rhs = B * dirichlet_energy(graph, f, 2.0) * (lp_norm(graph, f, 1.0)) ** (4.0 / n)
    return InequalityReport(
        "double_dagger",
        lhs,
        rhs,
        _ratio(lhs, rhs),
        _holds(lhs, rhs),
        {"n": n, "p": p, "B": B},
        label,
    )


def holder_step_check(graph: WeightedGraph, f: VertexFunction, p: float) -> tuple[float, float, bool]:
    """The interpolation bound
    sum |f|^2 mu <= (sum |f|^p mu)^(1/(p-1)) * (sum |f| mu)^((p-2)/(p-1)).

    Returns (lhs, rhs, holds).  A violation beyond slack is an implementation
    bug, not a property of the graph: the bound is pure Hoelder.
    """
    if p <= 2:
        raise ValueError("holder step needs p > 2")
    lhs = lp_norm(graph, f, 2.0) ** 2
    rhs = (lp_norm(graph, f, p) ** p) ** (1.0 / (p - 1.0)) * (
        lp_norm(graph, f, 1.0)
    ) ** ((p - 2.0) / (p - 1.0))
    return lhs, rhs, _holds(lhs, rhs)


def exponent_identities(n: float) -> tuple[float, float]:
    """Evaluate the two exponent products at p = 2n/(n-2).

    Returns ((1+2/n)*(1/(p-1))*(p/2), (1+2/n)*((p-2)/(p-1))); these should
    equal 1 and 4/n respectively.
    """
    p = p_from_n(n)
    first = (1.0 + 2.0 / n) * (1.0 / (p - 1.0)) * (p / 2.0)
    second = (1.0 + 2.0 / n) * ((p - 2.0) / (p - 1.0))
    return first, second


# ---------------------------------------------------------------------------
# dyadic decomposition


@dataclass
class DyadicLevel:
    k: int
    U: frozenset[int]  # |f| < 2^k
    V: frozenset[int]  # 2^k <= |f| < 2^(k+1)
    W: frozenset[int]  # |f| >= 2^(k+1)
    f_k: list[float]
    a_k: float  # 2^(pk) * mu(W_{k-1})
    b_k: float  # ordered-pair 2-energy of f_k over pairs inside V only


@dataclass
class DyadicDecomposition:
    p: float
    k_min: int
    k_max: int
    levels: dict  # k -> DyadicLevel, for k in [k_min, k_max]
    a_tail: float  # analytic sum of a_k over k < k_min (geometric, support mass)

    def k_range(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def sum_a(self) -> float:
        """Sum of a_k over all integers k, tail included."""
        return self.a_tail + sum(lvl.a_k for lvl in self.levels.values())

    def sum_b(self) -> float:
        return sum(lvl.b_k for lvl in self.levels.values())


def truncate(f: VertexFunction, k: int) -> list[float]:
    """Clamp |f| to the band [2^k, 2^(k+1)], rebased to start at 0."""
    lo, hi = 2.0**k, 2.0 ** (k + 1)
    return [min(max(abs(v), lo), hi) - lo for v in f]


def _band_index(v: float) -> int:
    # exact: 2^(k) <= v < 2^(k+1)  <=>  k = frexp exponent - 1
    m, e = math.frexp(abs(v))
    return e - 1


def dyadic_decompose(graph: WeightedGraph, f: VertexFunction, n: float) -> DyadicDecomposition:
    """Level sets, truncations and the per-level quantities a_k, b_k.

    Stored levels run from one below the lowest occupied band to one above
    the highest; a_k for the infinitely many k below the stored range sums
    to the geometric tail recorded in ``a_tail``.
    """
    p = p_from_n(n)
    nonzero = [abs(v) for v in f if v != 0]
    if not nonzero:
        return DyadicDecomposition(p, 0, -1, {}, 0.0)
    k_lo = _band_index(min(nonzero)) - 1
    k_hi = _band_index(max(nonzero)) + 1
    mu_support = mu_measure(graph, support(f))
    levels = {}
    for k in range(k_lo, k_hi + 1):
        lo, hi = 2.0**k, 2.0 ** (k + 1)
        U = frozenset(x for x, v in enumerate(f) if abs(v) < lo)
        V = frozenset(x for x, v in enumerate(f) if lo <= abs(v) < hi)
        W = frozenset(x for x, v in enumerate(f) if abs(v) >= hi)
        f_k = truncate(f, k)
        w_prev = frozenset(x for x, v in enumerate(f) if abs(v) >= lo)  # W_{k-1}
        a_k = 2.0 ** (p * k) * mu_measure(graph, w_prev)
        b_k = 2.0 * sum(
            (f_k[v] - f_k[u]) ** 2 * w
            for (u, v), w in graph.sigma.items()
            if u in V and v in V
        )
        levels[k] = DyadicLevel(k, U, V, W, f_k, a_k, b_k)
    # below k_lo every W_{k-1} is the full support, so a_k = 2^(pk) * mu(supp)
    a_tail = mu_support * 2.0 ** (p * k_lo) / (2.0**p - 1.0)
    return DyadicDecomposition(p, k_lo, k_hi, levels, a_tail)


# ---------------------------------------------------------------------------
# chain verification


@dataclass
class ChainLink:
    name: str
    k: Optional[int]
    lhs: float
    rhs: float
    holds: bool

    def to_json_dict(self) -> dict:
        return {"name": self.name, "k": self.k, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass
class ChainReport:
    n: float
    p: float
    B: float
    A: float
    links: list
    final: InequalityReport

    @property
    def final_holds(self) -> bool:
        return self.final.holds

    def failed_links(self) -> list:
        return [l for l in self.links if not l.holds]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "B": self.B,
            "A": self.A,
            "links": [l.to_json_dict() for l in self.links],
            "final": self.final.to_json_dict(),
            "final_holds": self.final_holds,
        }


def constant_relation(p: float, B: float) -> float:
    """A = (2^p - 1)^(2/p) * 2^(2(p-1)) * B."""
    return (2.0**p - 1.0) ** (2.0 / p) * 2.0 ** (2.0 * (p - 1.0)) * B


def verify_chain(
    graph: WeightedGraph, f: VertexFunction, n: float, B: float, label: Optional[str] = None
) -> ChainReport:
    """Evaluate every estimate in the truncation chain for the given f.

    Per-level links use b_k restricted to pairs inside V_k, exactly as
    written in the derivation; cross-level edge terms are dropped there, so
    individual links can fail and are recorded, never raised.  The final
    assembled inequality is the dagger form with A from constant_relation,
    checked independently against the full Dirichlet energy.
    """
    p = p_from_n(n)
    decomp = dyadic_decompose(graph, f, n)
    links: list[ChainLink] = []
    for k in decomp.k_range():
        lvl = decomp.levels[k]
        f_k = lvl.f_k
        # (*): double_dagger applied to f_k, with the restricted energy b_k
        lhs = (lp_norm(graph, f_k, 2.0) ** 2) ** (1.0 + 2.0 / n)
        rhs = B * lvl.b_k * lp_norm(graph, f_k, 1.0) ** (4.0 / n)
        links.append(ChainLink("star", k, lhs, rhs, _holds(lhs, rhs)))
        # (**): both sides bounded through the level masses
        mu_w = mu_measure(graph, lvl.W)
        mu_w_prev = 2.0 ** (-p * k) * lvl.a_k  # mu(W_{k-1})
        lhs = (2.0 ** (2 * k) * mu_w) ** (1.0 + 2.0 / n)
        rhs = B * lvl.b_k * (2.0**k * mu_w_prev) ** (4.0 / n)
        links.append(ChainLink("star_star", k, lhs, rhs, _holds(lhs, rhs)))
        # (#): the recursion on a_k
        a_next = decomp.levels[k + 1].a_k if k + 1 in decomp.levels else 0.0
        lhs = a_next
        rhs = (
            2.0**p
            * B ** (n / (n + 2.0))
            * lvl.b_k ** (n / (n + 2.0))
            * lvl.a_k ** (4.0 / (n + 2.0))
        )
        links.append(ChainLink("sharp", k, lhs, rhs, _holds(lhs, rhs)))
    sum_a = decomp.sum_a()
    sum_b = decomp.sum_b()
    # (##): the summed recursion
    lhs = sum_a
    rhs = 2.0 ** (p * (n + 2.0) / (n - 2.0)) * B ** (n / (n - 2.0)) * sum_b ** (n / (n - 2.0))
    links.append(ChainLink("sharp_sharp", None, lhs, rhs, _holds(lhs, rhs)))
    # closing bounds
    lhs = sum_b
    rhs = dirichlet_energy(graph, f, 2.0)
    links.append(ChainLink("sum_b_le_energy", None, lhs, rhs, _holds(lhs, rhs)))
    lhs = lp_norm(graph, f, p) ** p
    rhs = (2.0**p - 1.0) * sum_a
    links.append(ChainLink("lp_le_sum_a", None, lhs, rhs, _holds(lhs, rhs)))
    A = constant_relation(p, B)
    final = check_dagger(graph, f, n, A, label)
    return ChainReport(n, p, B, A, links, final)


# ---------------------------------------------------------------------------
# empirical constants


def empirical_A(graph: WeightedGraph, n: float, family: Iterable[VertexFunction]) -> float:
    """Smallest A making the dagger inequality hold on every family member."""
    p = p_from_n(n)
    best = 0.0
    for f in family:
        lhs = lp_norm(graph, f, p) ** 2
        denom = dirichlet_energy(graph, f, 2.0)
        if denom == 0.0:
            if lhs > 0.0:
                raise NoFiniteCError("family member with zero energy but nonzero norm")
            continue
        best = max(best, lhs / denom)
    return best


def empirical_B(graph: WeightedGraph, n: float, family: Iterable[VertexFunction]) -> float:
    """Smallest B making the double_dagger inequality hold on every member."""
    best = 0.0
    for f in family:
        lhs = (lp_norm(graph, f, 2.0) ** 2) ** (1.0 + 2.0 / n)
        denom = dirichlet_energy(graph, f, 2.0) * lp_norm(graph, f, 1.0) ** (4.0 / n)
        if denom == 0.0:
            if lhs > 0.0:
                raise NoFiniteCError("family member with zero energy but nonzero norm")
            continue
        best = max(best, lhs / denom)
    return best


def empirical_C(
    graph: WeightedGraph,
    c: float,
    n: float,
    p: float,
    v0: float,
    family: Iterable[VertexFunction],
) -> float:
    """Smallest nonnegative C(n,p) making the flat inequality hold on the family.

    Raises NoFiniteCError for degenerate members (zero gradient term but an
    uncovered critical norm), e.g. nonzero constants with K = 0; the default
    families exclude constants for this reason.
    """
    if p >= n:
        raise ExponentRangeError(f"flat inequality needs p < n, got p={p}, n={n}")
    q = n * p / (n - p)
    best = 0.0
    for f in family:
        target = c / 2.0 ** (1.0 + 1.0 / n - 1.0 / p) * lp_norm(graph, f, q, unweighted=True)
        k_val = k_factor(mu_measure(graph, support(f)), v0, n)
        covered = c * k_val * lp_norm(graph, f, p)
        need = target - covered
        if need <= 0.0:
            continue
        grad = dirichlet_energy(graph, f, p) ** (1.0 / p)
        if grad == 0.0:
            raise NoFiniteCError("zero-gradient family member needs an infinite constant")
        best = max(best, need / grad)
    return best


def random_test_function(vertex_count: int, rng: random.Random) -> list[float]:
    """Gaussian values, zeroed on a random nonempty set of vertices.

    Proper support keeps every dyadic truncation nonconstant on a connected
    graph, so empirical Nash/Sobolev constants stay finite over truncation
    families.
    """
    f = [rng.gauss(0.0, 1.0) for _ in range(vertex_count)]
    zeros = rng.randint(1, max(1, vertex_count // 3))
    for x in rng.sample(range(vertex_count), zeros):
        f[x] = 0.0
    return f


def chain_family(graph: WeightedGraph, f: VertexFunction, n: float) -> list[list[float]]:
    """The function together with all of its dyadic truncations."""
    return [list(f)] + [lvl.f_k for lvl in dyadic_decompose(graph, f, n).levels.values()]


def default_family(
    graph: WeightedGraph,
    seed: int = 0,
    count: int = 200,
    subset_indicator_cap: int = 16,
    include_truncations: bool = True,
) -> list[list[float]]:
    """Test functions: vertex indicators, subset indicators on small graphs,
    seeded random functions, and the dyadic truncations of the random ones.

    Indicator truncations are omitted: every truncation of a 0/1 function is
    identically zero.  Constant functions are excluded throughout, and random
    functions vanish on at least one vertex: a nowhere-zero function has a
    constant truncation below its minimum modulus, which no finite Nash
    constant can cover.
    """
    nv = graph.vertex_count
    family: list[list[float]] = []
    for x in range(nv):
        f = [0.0] * nv
        f[x] = 1.0
        family.append(f)
    if 1 < nv <= subset_indicator_cap:
        for mask in range(1, (1 << nv) - 1):
            if mask.bit_count() > 1:  # singletons already present
                family.append([1.0 if mask >> x & 1 else 0.0 for x in range(nv)])
    rng = random.Random(seed)
    randoms = [random_test_function(nv, rng) for _ in range(count)]
    family.extend(randoms)
    if include_truncations:
        for f in randoms:
            nonzero = [abs(v) for v in f if v != 0]
            if not nonzero:
                continue
            for k in range(_band_index(min(nonzero)), _band_index(max(nonzero)) + 1):
                family.append(truncate(f, k))
    return family
