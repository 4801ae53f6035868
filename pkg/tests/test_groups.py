import itertools

import pytest

from noncomm_lab import (
    GroupSpecError,
    OrderCapExceededError,
    build_group,
    center,
    commutes,
    is_abelian,
)
from noncomm_lab.groups import parse_spec, validate_group


def s3_oracle_table():
    """Composition table for S3 built independently: permutations as dicts,
    composed right-to-left via explicit function application."""
    perms = sorted(itertools.permutations(range(3)))
    table = []
    for p in perms:
        row = []
        for q in perms:
            composed = tuple(dict(enumerate(p))[q[i]] for i in range(3))
            row.append(perms.index(composed))
        table.append(row)
    return perms, table


def test_q8_structure():
    g = build_group("Q8")
    assert g.order == 8
    labels = {lab: i for i, lab in enumerate(g.labels)}
    i, j, k = labels["i"], labels["j"], labels["k"]
    minus_one = labels["-1"]
    assert g.mul(i, j) == k
    assert g.mul(j, k) == i
    assert g.mul(k, i) == j
    assert g.mul(i, i) == minus_one
    assert g.mul(j, j) == minus_one
    assert g.mul(k, k) == minus_one


def test_q8_center():
    g = build_group("Q8")
    z = center(g)
    assert len(z) == 2
    assert {g.labels[x] for x in z} == {"1", "-1"}


def test_trivial_group():
    g = build_group("C1")
    assert g.order == 1
    assert g.identity == 0


def test_s3_matches_independent_oracle():
    g = build_group("S3")
    perms, oracle = s3_oracle_table()
    assert g.order == 6
    assert g.cayley == tuple(tuple(row) for row in oracle)
    transpositions = [i for i, p in enumerate(perms) if sum(p[x] != x for x in range(3)) == 2]
    three_cycles = [i for i, p in enumerate(perms) if sum(p[x] != x for x in range(3)) == 3]
    assert len(transpositions) == 3
    assert len(three_cycles) == 2


def test_s3_center_is_identity_only():
    g = build_group("S3")
    # brute-force scan, independent of center()
    z = [a for a in range(6) if all(g.mul(a, b) == g.mul(b, a) for b in range(6))]
    assert z == [g.identity]
    assert center(g) == frozenset(z)


def test_abelian_center_is_whole_group():
    g = build_group("C6")
    assert center(g) == frozenset(range(6))
    assert is_abelian(g)


def test_commutes_q8_pairs():
    g = build_group("Q8")
    labels = {lab: i for i, lab in enumerate(g.labels)}
    assert commutes(g, labels["i"], labels["-i"])
    assert not commutes(g, labels["i"], labels["j"])
    for a in range(8):
        assert commutes(g, g.identity, a)


def test_commutes_s3_transpositions():
    g = build_group("S3")
    # one-line labels: "102" = (01), "210" = (02)
    t1, t2 = g.labels.index("102"), g.labels.index("210")
    assert not commutes(g, t1, t2)


def test_commutes_symmetric_and_index_errors():
    g = build_group("D4")
    for a in range(g.order):
        for b in range(g.order):
            assert commutes(g, a, b) == commutes(g, b, a)
    with pytest.raises(IndexError):
        commutes(g, 0, g.order)


@pytest.mark.parametrize("spec,order", [
    ("C5", 5), ("D3", 6), ("D(4)", 8), ("Q8", 8), ("S4", 24), ("A4", 12),
    ("q8xc2", 16), ("C2xC2xC2", 8), ("S3 x C2", 12),
])
def test_spec_parsing_and_orders(spec, order):
    g = build_group(spec)
    assert g.order == order
    validate_group(g)  # latin square, identity, associativity


def test_spec_errors():
    for bad in ["", "Q7", "E8", "Cx", "C0", "S3**C2"]:
        with pytest.raises(GroupSpecError):
            parse_spec(bad)
    with pytest.raises(OrderCapExceededError):
        build_group("S6")
    build_group("S5")  # order 120, under the default cap


def test_center_order_divides_group_order():
    for spec in ["Q8", "D4", "D6", "S4", "A4", "Q8xC2", "D5xC2"]:
        g = build_group(spec)
        assert g.order % len(center(g)) == 0


def test_dihedral_relations():
    g = build_group("D5")
    r, s = g.labels.index("r1"), g.labels.index("sr0")
    assert g.mul(s, s) == g.identity
    # s r s = r^{-1}
    assert g.mul(g.mul(s, r), s) == g.labels.index("r4")
