"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.
"""

import math
import random
import time

from noncomm_lab import (
    build_group,
    check_dagger,
    check_double_dagger,
    check_green,
    check_summation_by_parts,
    constant_c,
    check_P,
    diameter,
    dyadic_decompose,
    empirical_A,
    empirical_B,
    exponent_identities,
    graph_distance,
    holder_step_check,
    is_connected,
    laplacian,
    mu_measure,
    noncommuting_graph,
    nu,
    p_from_n,
    verify_chain,
    verify_isoperimetric,
)
from noncomm_lab.inequalities import chain_family, random_test_function

from conftest import NONABELIAN_SPECS_LE_32, make_random_graph

_SUITE_START = time.perf_counter()


def _report(criterion: str, passed: bool) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if passed else 'FAIL'}")
    assert passed, criterion


def test_criterion_1_q8_reproduction():
    start = time.perf_counter()
    graph = noncommuting_graph(build_group("Q8"))
    ok = graph.vertex_count == 6
    ok &= graph.edge_count() == 12
    ok &= all(graph.degree(x) == 4 for x in range(6))
    ok &= is_connected(graph) and diameter(graph) == 2
    nu2 = nu(graph, 2)
    ok &= nu2 == 4
    c = constant_c(4, 1, nu2, 1, nu2, variant="gamma_g")
    expected_c = 4**0.75 / (4**8 * math.e**8)
    ok &= abs(c - expected_c) <= 1e-15 * expected_c
    # the literal whole-graph check, with |E| standing in for the boundary
    ok &= graph.edge_count() >= c * mu_measure(graph, range(6)) ** 0.75
    ok &= time.perf_counter() - start < 1.0
    _report("criterion 1 (Q8 reproduction)", ok)


def test_criterion_2_p_certificates():
    start = time.perf_counter()
    ok = True
    for spec in NONABELIAN_SPECS_LE_32:
        graph = noncommuting_graph(build_group(spec))
        cert = check_P(graph, 1, 1, 1)
        min_degree = min(graph.degree(x) for x in range(graph.vertex_count))
        # brute-force nu_2 oracle: literal infimum over ball pairs
        ratios = []
        for xi in range(graph.vertex_count):
            dist = graph_distance(graph, xi)
            for x in range(graph.vertex_count):
                if dist[x] < 2:
                    d = sum(1 for y in graph.neighbors[x] if dist[y] < dist[x])
                    if d:
                        ratios.append(graph.mu[x] / d)
        nu2_oracle = min(ratios)
        ok &= cert.passed and cert.n == nu2_oracle == min_degree
    ok &= time.perf_counter() - start < 30.0
    _report("criterion 2 (P certificates, order <= 32)", ok)


def test_criterion_3_exhaustive_isoperimetric():
    start = time.perf_counter()
    ok = True
    checked_any = False
    for spec in NONABELIAN_SPECS_LE_32:
        graph = noncommuting_graph(build_group(spec))
        nv = graph.vertex_count
        if nv > 16:
            continue
        checked_any = True
        n = nu(graph, 2)
        c = constant_c(graph.min_vertex_weight(), 1, n, 1, n, variant="gamma_g")
        report = verify_isoperimetric(graph, c, n, mode="exhaustive")
        ok &= report.subsets_checked == 2**nv - 2
        ok &= report.violations == []
    ok &= checked_any
    ok &= time.perf_counter() - start < 60.0
    _report("criterion 3 (exhaustive isoperimetric, |V| <= 16)", ok)


def test_criterion_4_calculus_identities():
    rng = random.Random(101)
    graphs = [
        noncommuting_graph(build_group(spec)) for spec in ("Q8", "S3", "D4", "A4")
    ] + [make_random_graph(rng) for _ in range(4)]
    ok = True
    for graph in graphs:
        nv = graph.vertex_count
        for _ in range(100):
            f = [rng.gauss(0, 1) for _ in range(nv)]
            g = [rng.gauss(0, 1) for _ in range(nv)]
            omega = {x for x in range(nv) if rng.random() < 0.5}
            lap = laplacian(graph, f)
            scale = sum(abs(l) * m for l, m in zip(lap, graph.mu))
            ok &= check_green(graph, f, omega) <= 1e-12 * (1 + scale)
            sbp_scale = abs(sum(l * v * m for l, v, m in zip(lap, g, graph.mu)))
            ok &= check_summation_by_parts(graph, f, g) <= 1e-12 * (1 + sbp_scale)
            ok &= abs(sum(l * m for l, m in zip(lap, graph.mu))) <= 1e-12 * (1 + scale)
    _report("criterion 4 (Green / summation-by-parts residuals)", ok)


def test_criterion_5_holder_step():
    rng = random.Random(102)
    ok = True
    for _ in range(20):
        graph = make_random_graph(rng)
        n = rng.uniform(2.5, 10)
        p = p_from_n(n)
        first, second = exponent_identities(n)
        ok &= abs(first - 1) <= 1e-12 and abs(second - 4 / n) <= 1e-12
        for _ in range(50):
            f = [rng.gauss(0, 1) for _ in range(graph.vertex_count)]
            _, _, holds = holder_step_check(graph, f, p)
            ok &= holds
    _report("criterion 5 (Hoelder step, 1000 functions / 20 graphs)", ok)


def test_criterion_6_truncation_invariants():
    rng = random.Random(103)
    ok = True
    for _ in range(200):
        graph = make_random_graph(rng, n_max=8)
        nv = graph.vertex_count
        f = [rng.gauss(0, 2) if rng.random() < 0.8 else 0.0 for _ in range(nv)]
        decomp = dyadic_decompose(graph, f, 4)
        everything = frozenset(range(nv))
        for k in decomp.k_range():
            lvl = decomp.levels[k]
            ok &= lvl.U | lvl.V | lvl.W == everything
            ok &= not (lvl.U & lvl.V or lvl.V & lvl.W or lvl.U & lvl.W)
            if k + 1 in decomp.levels:
                ok &= decomp.levels[k + 1].W <= lvl.W
            f_k = lvl.f_k
            for x in range(nv):
                for y in range(x + 1, nv):
                    ok &= abs(f_k[y] - f_k[x]) <= abs(f[y] - f[x])  # exact
    _report("criterion 6 (truncation contraction and level sets)", ok)


def test_criterion_7_equivalence_constants():
    rng = random.Random(104)
    ok = True
    cases = [
        (noncommuting_graph(build_group("Q8")), 4.0),
        (noncommuting_graph(build_group("S3")), 3.0),
    ]
    for graph, n in cases:
        for _ in range(50):
            f = random_test_function(graph.vertex_count, rng)
            b_val = empirical_B(graph, n, chain_family(graph, f, n))
            rep = verify_chain(graph, f, n, b_val)
            ok &= rep.final_holds
            # any A making the Sobolev form hold also makes the Nash form hold
            a_sharp = empirical_A(graph, n, [f])
            ok &= check_dagger(graph, f, n, a_sharp).holds
            ok &= check_double_dagger(graph, f, n, a_sharp).holds
    _report("criterion 7 (equivalence constants)", ok)


def test_criterion_8_desk_scale_runtime():
    # the whole acceptance suite must fit in a laptop-scale time budget
    elapsed = time.perf_counter() - _SUITE_START
    _report(f"criterion 8 (desk scale: {elapsed:.1f}s elapsed < 180s)", elapsed < 180.0)
