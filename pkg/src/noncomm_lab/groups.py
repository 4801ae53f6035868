"""Finite groups as explicit Cayley tables.

Groups are built from a small spec language:

    atom := C(n) | D(n) | Q8 | S(n) | A(n)
    spec := atom ('x' atom)*

Parentheses are optional ("C6" == "C(6)") and parsing is case-insensitive.
D(n) is the dihedral group of order 2n.  Every built table is validated
exhaustively: Latin-square rows/columns, two-sided identity, associativity.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import GroupSpecError, GroupTableError, OrderCapExceededError

DEFAULT_ORDER_CAP = 512

_ATOM_RE = re.compile(r"^([CDSA])\(?(\d+)\)?$|^(Q8)$", re.IGNORECASE)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``cayley[a][b]`` is the index of the product a*b.  Element 0..order-1,
    with ``identity`` the index of the neutral element.
    """

    name: str
    order: int
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]
    _center: frozenset[int] = field(init=False, repr=False, compare=False, default=None)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def table(self) -> np.ndarray:
        return np.asarray(self.cayley, dtype=np.int64)


def commutes(g: FiniteGroup, a: int, b: int) -> bool:
    """True iff a*b == b*a."""
    if not (0 <= a < g.order and 0 <= b < g.order):
        raise IndexError(f"element index out of range: ({a}, {b})")
    return g.cayley[a][b] == g.cayley[b][a]


def center(g: FiniteGroup) -> frozenset[int]:
    """Elements commuting with every element of the group."""
    if g._center is not None:
        return g._center
    table = g.table()
    z = frozenset(int(i) for i in np.flatnonzero((table == table.T).all(axis=1)))
    object.__setattr__(g, "_center", z)
    return z


def is_abelian(g: FiniteGroup) -> bool:
    return len(center(g)) == g.order


# ---------------------------------------------------------------------------
# atom constructors


def _cyclic(n: int) -> tuple[list[list[int]], int, list[str]]:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return table, 0, [f"g{a}" if a else "e" for a in range(n)]


def _dihedral(n: int) -> tuple[list[list[int]], int, list[str]]:
    # element r^a s^t encoded as a + n*t; s r = r^{-1} s
    def mul(x, y):
        a, t = x % n, x // n
        b, u = y % n, y // n
        rot = (a + b) % n if t == 0 else (a - b) % n
        return rot + n * (t ^ u)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    labels = [f"r{a}" for a in range(n)] + [f"sr{a}" for a in range(n)]
    labels[0] = "e"
    return table, 0, labels


_Q8_UNITS = "1ijk"
# product of basis quaternions: sign and unit of u*v
_Q8_MUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternion() -> tuple[list[list[int]], int, list[str]]:
    # elements: 1, -1, i, -i, j, -j, k, -k
    elems = [(s, u) for u in _Q8_UNITS for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (sx, ux), (sy, uy) = elems[x], elems[y]
        s, u = _Q8_MUL[(ux, uy)]
        return index[(sx * sy * s, u)]

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    labels = [("" if s == 1 else "-") + u for (s, u) in elems]
    return table, 0, labels


def _perm_group(n: int, even_only: bool) -> tuple[list[list[int]], int, list[str]]:
    perms = [p for p in itertools.permutations(range(n)) if not even_only or _is_even(p)]
    perms.sort()  # lexicographic one-line order, for deterministic reports
    index = {p: i for i, p in enumerate(perms)}

    def mul(x, y):
        p, q = perms[x], perms[y]
        return index[tuple(p[q[i]] for i in range(n))]

    table = [[mul(x, y) for y in range(len(perms))] for x in range(len(perms))]
    labels = ["".join(map(str, p)) for p in perms]
    return table, index[tuple(range(n))], labels


def _is_even(p: tuple[int, ...]) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def _direct_product(a: FiniteGroup, b: FiniteGroup) -> tuple[list[list[int]], int, list[str]]:
    pairs = [(x, y) for x in range(a.order) for y in range(b.order)]
    index = {p: i for i, p in enumerate(pairs)}
    table = [
        [index[(a.cayley[x1][x2], b.cayley[y1][y2])] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    labels = [f"({a.labels[x]},{b.labels[y]})" for (x, y) in pairs]
    return table, index[(a.identity, b.identity)], labels


# ---------------------------------------------------------------------------
# spec parsing and validation


def parse_spec(spec: str) -> list[tuple[str, int]]:
    """Split a spec string into (family, parameter) atoms."""
    atoms = []
    for raw in spec.replace(" ", "").split("x"):
        m = _ATOM_RE.match(raw.upper())
        if not m or not raw:
            raise GroupSpecError(f"cannot parse atom {raw!r} in spec {spec!r}")
        if m.group(3):
            atoms.append(("Q", 8))
        else:
            fam, n = m.group(1).upper(), int(m.group(2))
            if n < 1:
                raise GroupSpecError(f"atom parameter must be >= 1: {raw!r}")
            atoms.append((fam, n))
    return atoms


def _atom_order(fam: str, n: int) -> int:
    if fam == "C":
        return n
    if fam == "D":
        return 2 * n
    if fam == "Q":
        return 8
    if fam == "S":
        return _factorial(n)
    if fam == "A":
        return max(1, _factorial(n) // 2)
    raise GroupSpecError(fam)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _build_atom(fam: str, n: int) -> FiniteGroup:
    if fam == "C":
        table, e, labels = _cyclic(n)
        name = f"C{n}"
    elif fam == "D":
        table, e, labels = _dihedral(n)
        name = f"D{n}"
    elif fam == "Q":
        table, e, labels = _quaternion()
        name = "Q8"
    elif fam == "S":
        table, e, labels = _perm_group(n, even_only=False)
        name = f"S{n}"
    else:
        table, e, labels = _perm_group(n, even_only=True)
        name = f"A{n}"
    return FiniteGroup(name, len(table), tuple(map(tuple, table)), e, tuple(labels))


def validate_group(g: FiniteGroup) -> None:
    """Exhaustive axiom check; raises GroupTableError on any failure."""
    n = g.order
    t = g.table()
    if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
        raise GroupTableError("table shape or entries out of range")
    ref = np.arange(n)
    if not (np.sort(t, axis=1) == ref).all() or not (np.sort(t, axis=0) == ref[:, None]).all():
        raise GroupTableError("Cayley table is not a Latin square")
    e = g.identity
    if not (t[e] == ref).all() or not (t[:, e] == ref).all():
        raise GroupTableError("identity element is not neutral")
    for a in range(n):
        if not (t[t[a]] == t[a][t]).all():  # (a*b)*c == a*(b*c) for all b, c
            raise GroupTableError(f"associativity fails at element {a}")


def build_group(spec: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build the group named by ``spec``, validating all group axioms."""
    atoms = parse_spec(spec)
    order = 1
    for fam, n in atoms:
        order *= _atom_order(fam, n)
    if order > order_cap:
        raise OrderCapExceededError(f"group order {order} exceeds cap {order_cap}")
    g = _build_atom(*atoms[0])
    for fam, n in atoms[1:]:
        h = _build_atom(fam, n)
        table, e, labels = _direct_product(g, h)
        g = FiniteGroup(f"{g.name}x{h.name}", len(table), tuple(map(tuple, table)), e, tuple(labels))
    validate_group(g)
    return g
