"""The zigzag algebra of an unfolded graph, over exact rationals.

The basis consists of a constant path e_v and a loop X_v for each
vertex plus a pair of opposite arrows (u|v)_a, (v|u)_a per multiplicity
unit of each edge.  Multiplication concatenates paths, kills anything
of total degree three or more, and caps an arrow against its own
reverse to the loop at the source: (u|v)_a (v|u)_b = delta_ab X_u.  All
cap coefficients are +1; any other choice of unit rescaling gives an
isomorphic algebra.

Maps between shifted projectives P_u<k> -> P_v<k'> are linear
combinations of paths from u to v of degree k - k', acting by right
multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .coxgraph import GraphError
from .unfolding import UnfoldedGraph

# (basis index, coefficient) pairs, sorted by index, zeros dropped
Combo = tuple[tuple[int, Fraction], ...]

ONE = Fraction(1)

_DEGREE = {"e": 0, "X": 2, "arrow": 1}


@dataclass(frozen=True)
class ZigzagAlgebra:
    """Basis labels are ("e", v), ("X", v), or ("arrow", u, v, a)."""

    quiver: UnfoldedGraph
    basis: tuple[tuple, ...]
    mult: dict[tuple[int, int], Combo]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _basis_index(self) -> dict[tuple, int]:
        return {b: k for k, b in enumerate(self.basis)}

    def source(self, i: int) -> int:
        return self.basis[i][1]

    def target(self, i: int) -> int:
        b = self.basis[i]
        return b[2] if b[0] == "arrow" else b[1]

    def degree(self, i: int) -> int:
        return _DEGREE[self.basis[i][0]]


@dataclass(frozen=True)
class HomElement:
    """A map P_source -> P_target, as a combination of basis paths."""

    source: tuple[int, int]
    target: tuple[int, int]
    combo: Combo


def _product(index: dict[tuple, int], bi: tuple, bj: tuple) -> Combo:
    ti = bi[2] if bi[0] == "arrow" else bi[1]
    if ti != bj[1]:
        return ()
    if _DEGREE[bi[0]] + _DEGREE[bj[0]] >= 3:
        return ()
    if bi[0] == "e":
        return ((index[bj], ONE),)
    if bj[0] == "e":
        return ((index[bi], ONE),)
    # two arrows with matching ends: cap iff they are mutual reverses
    if bi[1] == bj[2] and bi[3] == bj[3]:
        return ((index[("X", bi[1])], ONE),)
    return ()


def build_zigzag(u: UnfoldedGraph) -> ZigzagAlgebra:
    n = len(u.vertices)
    arrows = []
    for i, j, m in u.edges:
        for a in range(m):
            arrows.append(("arrow", i, j, a))
            arrows.append(("arrow", j, i, a))
    arrows.sort(key=lambda b: (b[1], b[2], b[3]))
    basis = tuple(
        [("e", v) for v in range(n)]
        + [("X", v) for v in range(n)]
        + arrows
    )
    index = {b: k for k, b in enumerate(basis)}
    mult: dict[tuple[int, int], Combo] = {}
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            out = _product(index, bi, bj)
            if out:
                mult[i, j] = out
    return ZigzagAlgebra(u, basis, mult)


def _vertex_index(A: ZigzagAlgebra, v) -> int:
    if isinstance(v, int):
        if not 0 <= v < len(A.quiver.vertices):
            raise GraphError(f"vertex index {v} out of range")
        return v
    return A.quiver.index(v)


def multiply_basis(A: ZigzagAlgebra, i: int, j: int) -> Combo:
    return A.mult.get((i, j), ())


def multiply_combo(A: ZigzagAlgebra, x: Combo, y: Combo) -> Combo:
    acc: dict[int, Fraction] = {}
    for i, ci in x:
        for j, cj in y:
            for k, ck in A.mult.get((i, j), ()):
                acc[k] = acc.get(k, 0) + ci * cj * ck
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def hom_basis(A: ZigzagAlgebra, src, tgt) -> list[HomElement]:
    """Basis of maps P_u<k> -> P_v<k'>: paths u -> v of degree k - k'."""
    (u, k), (v, k2) = src, tgt
    u, v = _vertex_index(A, u), _vertex_index(A, v)
    d = k - k2
    return [
        HomElement((u, k), (v, k2), ((i, ONE),))
        for i in range(A.dim)
        if A.source(i) == u and A.target(i) == v and A.degree(i) == d
    ]


def compose(A: ZigzagAlgebra, f: HomElement, g: HomElement) -> HomElement:
    """f then g; the combo is the path product f.combo * g.combo."""
    if f.target != g.source:
        raise ValueError(
            f"composition endpoints do not match: {f.target} vs {g.source}"
        )
    return HomElement(f.source, g.target, multiply_combo(A, f.combo, g.combo))


def frobenius_comult(A: ZigzagAlgebra, v) -> dict[int, tuple[tuple[int, int], ...]]:
    """Components of the comultiplication into P_v (x) vP, per idempotent.

    Row t lists the tensor terms the map sends e_t to, as pairs of
    basis indices with implied coefficient +1: the diagonal row gets
    e_v (x) X_v + X_v (x) e_v, a neighbor gets one cup term per shared
    arrow index, everything else is zero.
    """
    v = _vertex_index(A, v)
    idx = A._basis_index
    rows: dict[int, tuple[tuple[int, int], ...]] = {}
    neighbor_mult = {}
    for i, j, m in A.quiver.edges:
        if i == v:
            neighbor_mult[j] = m
        elif j == v:
            neighbor_mult[i] = m
    for t in range(len(A.quiver.vertices)):
        if t == v:
            e, x = idx[("e", v)], idx[("X", v)]
            rows[t] = ((e, x), (x, e))
        elif t in neighbor_mult:
            rows[t] = tuple(
                (idx[("arrow", t, v, a)], idx[("arrow", v, t, a)])
                for a in range(neighbor_mult[t])
            )
        else:
            rows[t] = ()
    return rows


def path_label(A: ZigzagAlgebra, i: int) -> str:
    """Human-readable path name; folded to base names for a trivial ring."""
    fold = A.quiver.ring.rank == 1

    def vname(k: int) -> str:
        s, lab = A.quiver.vertices[k]
        return s if fold else f"({s},{lab})"

    b = A.basis[i]
    if b[0] == "e":
        return f"e_{vname(b[1])}"
    if b[0] == "X":
        return f"X_{vname(b[1])}"
    _, u, v, a = b
    pair = (u, v) if u < v else (v, u)
    m = next(m for i2, j2, m in A.quiver.edges if (i2, j2) == pair)
    suffix = f"_{a}" if m > 1 else ""
    return f"({vname(u)}|{vname(v)}){suffix}"
