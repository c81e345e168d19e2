"""The fusion lattice: reflections, Burau matrices, words, and roots.

The lattice is the free Z-module on pairs (vertex, simple of the fusion
ring), vertex-major: coordinate index = vertex_index * ring.rank +
simple_index.  Reflection matrices are plain nested tuples of ints with
column j holding the image of the j-th basis vector, so words act by
left multiplication and the first letter of a word always acts first.

Burau matrices live over the fusion ring with Laurent q-coefficients.
An entry is a sorted tuple of (exponent, FusionElement) pairs with zero
coefficients dropped, which makes equality literal; the matrix carries
its ring so specialization needs no extra argument.

Positive-root enumeration walks the W-orbit of the simple roots in
layers (the simple roots are layer 1) and keys results on the
associated reflection, not on the raw vector: for even edge labels the
lattice carries several vectors over one real root line, and the count
of root lines is what the orbit is asked for.  The first vector found
for each reflection is the returned representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxgraph import INF, CoxeterGraph
from .fusion import FusionElement, FusionRing, edge_object, multiply


@dataclass(frozen=True)
class LatticeVector:
    coefficients: tuple[int, ...]


LaurentEntry = tuple[tuple[int, FusionElement], ...]


@dataclass(frozen=True)
class LaurentFusionMatrix:
    ring: FusionRing
    size: int
    entries: tuple[tuple[LaurentEntry, ...], ...]


def simple_root(g: CoxeterGraph, ring: FusionRing, s: str) -> LatticeVector:
    n = g.rank * ring.rank
    pos = g.index(s) * ring.rank + ring.unit_index
    return LatticeVector(tuple(1 if k == pos else 0 for k in range(n)))


def _pair_forms(g: CoxeterGraph, ring: FusionRing) -> list[list[FusionElement]]:
    """B_C(alpha_s, alpha_t) for every ordered vertex pair."""
    zero = FusionElement((0,) * ring.rank)
    two_unit = FusionElement(
        tuple(2 if k == ring.unit_index else 0 for k in range(ring.rank))
    )
    table = [[zero] * g.rank for _ in range(g.rank)]
    for i in range(g.rank):
        table[i][i] = two_unit
    for i, j, _ in g.edges:
        val = -edge_object(g, (i, j))
        table[i][j] = val
        table[j][i] = val
    return table


def bilinear_form_C(
    g: CoxeterGraph, ring: FusionRing, a: LatticeVector, b: LatticeVector
) -> FusionElement:
    n = g.rank * ring.rank
    if len(a.coefficients) != n or len(b.coefficients) != n:
        raise ValueError("vector length does not match the lattice rank")
    forms = _pair_forms(g, ring)
    out = FusionElement((0,) * ring.rank)
    for i, ca in enumerate(a.coefficients):
        if not ca:
            continue
        s, e = divmod(i, ring.rank)
        for j, cb in enumerate(b.coefficients):
            if not cb:
                continue
            t, f = divmod(j, ring.rank)
            base = forms[s][t]
            if not any(base.coefficients):
                continue
            ef = FusionElement(ring.N[e][f])
            term = multiply(ring, ef, base)
            out = out + FusionElement(
                tuple(ca * cb * c for c in term.coefficients)
            )
    return out


def simple_reflection_matrix(
    g: CoxeterGraph, ring: FusionRing, s: str
) -> tuple[tuple[int, ...], ...]:
    """Matrix of v -> v - B_C(alpha_s, v) alpha_s; columns are images."""
    si = g.index(s)
    nr = ring.rank
    n = g.rank * nr
    forms = _pair_forms(g, ring)
    mat = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for t in range(g.rank):
        base = forms[si][t]
        if not any(base.coefficients):
            continue
        for f in range(nr):
            # image of [F] alpha_t loses ([F] B_C(a_s, a_t)) alpha_s
            drop = multiply(ring, FusionElement.simple(ring, f), base)
            col = t * nr + f
            for e, c in enumerate(drop.coefficients):
                mat[si * nr + e][col] -= c
    return tuple(tuple(row) for row in mat)


def mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_apply(m, v: LatticeVector) -> LatticeVector:
    return LatticeVector(
        tuple(sum(row[j] * c for j, c in enumerate(v.coefficients)) for row in m)
    )


def coxeter_word_matrix(
    g: CoxeterGraph, ring: FusionRing, word
) -> tuple[tuple[int, ...], ...]:
    n = g.rank * ring.rank
    acc = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
    for name in word:
        acc = mat_mul(simple_reflection_matrix(g, ring, name), acc)
    return acc


def coxeter_word_equal(g: CoxeterGraph, w1, w2) -> bool:
    from .fusion import coxeter_fusion_ring

    ring = coxeter_fusion_ring(g)
    return coxeter_word_matrix(g, ring, tuple(w1)) == coxeter_word_matrix(
        g, ring, tuple(w2)
    )


def _norm_entry(pairs) -> LaurentEntry:
    by_exp: dict[int, tuple[int, ...]] = {}
    for exp, fe in pairs:
        cur = by_exp.get(exp)
        by_exp[exp] = (
            fe.coefficients
            if cur is None
            else tuple(x + y for x, y in zip(cur, fe.coefficients))
        )
    return tuple(
        (exp, FusionElement(co))
        for exp, co in sorted(by_exp.items())
        if any(co)
    )


def _entry_add(a: LaurentEntry, b: LaurentEntry) -> LaurentEntry:
    return _norm_entry(list(a) + list(b))


def _entry_mul(ring: FusionRing, a: LaurentEntry, b: LaurentEntry) -> LaurentEntry:
    out = []
    for ea, fa in a:
        for eb, fb in b:
            out.append((ea + eb, multiply(ring, fa, fb)))
    return _norm_entry(out)


def _unit_entry(ring: FusionRing, exp: int = 0, scale: int = 1) -> LaurentEntry:
    coeffs = [0] * ring.rank
    coeffs[ring.unit_index] = scale
    return ((exp, FusionElement(tuple(coeffs))),)


def _laurent_identity(g: CoxeterGraph, ring: FusionRing) -> LaurentFusionMatrix:
    one = _unit_entry(ring)
    entries = tuple(
        tuple(one if r == c else () for c in range(g.rank)) for r in range(g.rank)
    )
    return LaurentFusionMatrix(ring, g.rank, entries)


def burau_generator(
    g: CoxeterGraph, ring: FusionRing, s: str, inverse: bool = False
) -> LaurentFusionMatrix:
    """sigma_s: [P_s] -> -q^2 [P_s], [P_t] -> [P_t] - q [Pi(e)][P_s]."""
    si = g.index(s)
    rows = [[() for _ in range(g.rank)] for _ in range(g.rank)]
    for t in range(g.rank):
        if t != si:
            rows[t][t] = _unit_entry(ring)
    qexp = -1 if inverse else 1
    rows[si][si] = _unit_entry(ring, exp=2 * qexp, scale=-1)
    for t in g.neighbors(si):
        pi = edge_object(g, (si, t))
        rows[si][t] = _norm_entry([(qexp, -pi)])
    return LaurentFusionMatrix(ring, g.rank, tuple(tuple(r) for r in rows))


def _laurent_mul(a: LaurentFusionMatrix, b: LaurentFusionMatrix) -> LaurentFusionMatrix:
    n = a.size
    entries = tuple(
        tuple(
            _norm_entry(
                [
                    term
                    for k in range(n)
                    for term in _entry_mul(a.ring, a.entries[i][k], b.entries[k][j])
                ]
            )
            for j in range(n)
        )
        for i in range(n)
    )
    return LaurentFusionMatrix(a.ring, n, entries)


def _letters(word):
    for letter in word:
        if isinstance(letter, str):
            yield letter, 1
        else:
            name, exp = letter
            if exp not in (1, -1):
                raise ValueError(f"braid letter exponents must be +-1, got {exp}")
            yield name, exp


def burau_word(g: CoxeterGraph, ring: FusionRing, word) -> LaurentFusionMatrix:
    """Matrix of the braid word; the first letter of the word acts first."""
    gens: dict[tuple[str, int], LaurentFusionMatrix] = {}
    acc = _laurent_identity(g, ring)
    for name, exp in _letters(word):
        key = (name, exp)
        if key not in gens:
            gens[key] = burau_generator(g, ring, name, inverse=exp < 0)
        acc = _laurent_mul(gens[key], acc)
    return acc


def specialize_q(m: LaurentFusionMatrix, value: int = -1):
    """Evaluate q and expand fusion coefficients into the lattice basis."""
    ring = m.ring
    nr = ring.rank
    n = m.size * nr
    big = [[0] * n for _ in range(n)]
    for t in range(m.size):
        for s in range(m.size):
            entry = m.entries[t][s]
            if not entry:
                continue
            for f in range(nr):
                col = s * nr + f
                fsimple = FusionElement.simple(ring, f)
                for exp, fe in entry:
                    if value == 0 and exp < 0:
                        raise ValueError("cannot evaluate q^-1 at q=0")
                    weight = Fraction(value) ** exp
                    prod = multiply(ring, fe, fsimple)
                    for e, c in enumerate(prod.coefficients):
                        if c:
                            big[t * nr + e][col] += weight * c
    out = []
    for row in big:
        out.append(
            tuple(int(x) if Fraction(x).denominator == 1 else x for x in row)
        )
    return tuple(out)


def burau_column(m: LaurentFusionMatrix, x: int):
    """Image of [P_x] as Laurent coefficients on the lattice basis."""
    nr = m.ring.rank
    cols = []
    for t in range(m.size):
        entry = m.entries[t][x]
        for e in range(nr):
            pairs = tuple(
                (exp, fe.coefficients[e]) for exp, fe in entry if fe.coefficients[e]
            )
            cols.append(pairs)
    return tuple(cols)


def root_layers(
    g: CoxeterGraph, ring: FusionRing, depth: int
) -> list[set[LatticeVector]]:
    """Orbit layers of the simple roots; one representative per reflection.

    Layer 1 is the simple roots themselves, so depth bounds the layer
    count.  Vectors leaving the nonnegative orthant are negative-root
    duplicates and are dropped.
    """
    if depth <= 0:
        return []
    mats = [simple_reflection_matrix(g, ring, v) for v in g.vertices]
    nr = ring.rank
    n = g.rank * nr
    seen_vectors: set[tuple[int, ...]] = set()
    seen_refls: set[tuple[tuple[int, ...], ...]] = set()
    frontier = []
    first: set[LatticeVector] = set()
    for vi in range(g.rank):
        vec = tuple(1 if k == vi * nr else 0 for k in range(n))
        seen_vectors.add(vec)
        seen_refls.add(mats[vi])
        first.add(LatticeVector(vec))
        frontier.append((vec, mats[vi]))
    layers = [first]
    for _ in range(depth - 1):
        if not frontier:
            break
        frontier.sort(key=lambda node: node[0])
        nxt = []
        layer: set[LatticeVector] = set()
        for vec, refl in frontier:
            for m in mats:
                image = tuple(
                    sum(row[j] * vec[j] for j in range(n) if vec[j]) for row in m
                )
                if image in seen_vectors:
                    continue
                seen_vectors.add(image)
                if any(c < 0 for c in image):
                    continue
                conj = mat_mul(mat_mul(m, refl), m)
                if conj in seen_refls:
                    continue
                seen_refls.add(conj)
                layer.add(LatticeVector(image))
                nxt.append((image, conj))
        if layer:
            layers.append(layer)
        frontier = nxt
    return layers


def enumerate_positive_roots(
    g: CoxeterGraph, ring: FusionRing, depth: int
) -> set[LatticeVector]:
    out: set[LatticeVector] = set()
    for layer in root_layers(g, ring, depth):
        out |= layer
    return out
