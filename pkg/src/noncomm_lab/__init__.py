"""Noncommuting graphs of finite groups and numerical verification of
discrete isoperimetric, Sobolev, and Nash inequalities on weighted graphs."""

from .errors import (
    AbelianGroupError,
    BudgetExceededError,
    DimensionTooSmallError,
    ExponentRangeError,
    GroupSpecError,
    GroupTableError,
    IsolatedVertexError,
    NoAdmissiblePairError,
    NoFiniteCError,
    NoncommLabError,
    OrderCapExceededError,
    SobolevExponentUndefinedError,
    UnreachableVertexError,
)
from .groups import FiniteGroup, build_group, center, commutes, is_abelian
from .graphs import (
    WeightedGraph,
    ball,
    boundary,
    diameter,
    from_edges,
    graph_distance,
    hamiltonian_cycle,
    is_connected,
    mu_measure,
    noncommuting_graph,
    sigma_measure,
    to_dot,
    to_json,
)
from .calculus import (
    check_green,
    check_summation_by_parts,
    dirichlet_energy,
    gradient,
    laplacian,
    lp_norm,
)
from .isoperimetry import (
    IsoReport,
    PCertificate,
    check_P,
    constant_c,
    empirical_iso_constant,
    mu_directed,
    nu,
    verify_isoperimetric,
)
from .inequalities import (
    ChainReport,
    DyadicDecomposition,
    InequalityReport,
    check_dagger,
    check_double_dagger,
    check_sobolev_flat,
    constant_relation,
    default_family,
    dyadic_decompose,
    empirical_A,
    empirical_B,
    empirical_C,
    exponent_identities,
    holder_step_check,
    k_factor,
    p_from_n,
    verify_chain,
)

__version__ = "0.1.0"
