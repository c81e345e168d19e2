"""Bounded complexes of graded projectives and the spherical twist action.

A complex keeps, per cohomological degree, an ordered tuple of summands
(v, k) standing for P_v<k>, together with differential matrices whose
entries are path combinations acting by right multiplication.  All
coefficients are Fractions and d . d = 0 is asserted after every
construction step.  A complex is minimal when no entry contains an
idempotent; gaussian_eliminate reaches that form.  Construction sorts
the summands of each degree by (vertex, shift), so two equal minimal
complexes compare equal as plain values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .unfolding import UnfoldedGraph, fiber
from .zigzag import (
    ONE,
    Combo,
    ZigzagAlgebra,
    _vertex_index,
    frobenius_comult,
    multiply_combo,
)


@dataclass(frozen=True)
class Complex:
    """terms: degree -> summands (v, k); diffs: degree -> entry matrix.

    diffs[i][r][c] is the component from the r-th degree-i summand to
    the c-th degree-(i+1) summand; the key i is present exactly when
    both degrees are.
    """

    terms: dict[int, tuple[tuple[int, int], ...]]
    diffs: dict[int, tuple[tuple[Combo, ...], ...]]


def _add_combo(x: Combo, y: Combo) -> Combo:
    acc = dict(x)
    for b, co in y:
        acc[b] = acc.get(b, 0) + co
    return tuple(sorted((b, co) for b, co in acc.items() if co))


def _scale_combo(x: Combo, a: Fraction) -> Combo:
    return tuple((b, co * a) for b, co in x) if a else ()


def _normalize_entry(entry) -> Combo:
    acc: dict[int, Fraction] = {}
    for b, co in entry:
        acc[b] = acc.get(b, 0) + Fraction(co)
    return tuple(sorted((b, co) for b, co in acc.items() if co))


def _check_complex(A: ZigzagAlgebra, c: Complex) -> None:
    # entries are homogeneous paths between the summands they connect
    for i, mat in c.diffs.items():
        rows, cols = c.terms[i], c.terms[i + 1]
        assert len(mat) == len(rows)
        for r, row in enumerate(mat):
            assert len(row) == len(cols)
            u, k = rows[r]
            for cc, entry in enumerate(row):
                v, k2 = cols[cc]
                for b, co in entry:
                    assert co != 0
                    assert A.source(b) == u and A.target(b) == v
                    assert A.degree(b) == k - k2
    for i, mat in c.diffs.items():
        nxt = c.diffs.get(i + 1)
        if nxt is None:
            continue
        for r in range(len(c.terms[i])):
            for cc in range(len(c.terms[i + 2])):
                acc: Combo = ()
                for m in range(len(c.terms[i + 1])):
                    acc = _add_combo(acc, multiply_combo(A, mat[r][m], nxt[m][cc]))
                assert acc == (), f"d.d != 0 at degree {i}"


def make_complex(A: ZigzagAlgebra, terms, diffs) -> Complex:
    """Build a validated complex from summand lists and entry matrices.

    Empty degrees are dropped, each degree's summands are stably sorted
    by (vertex, shift) with the matching permutation applied to the
    matrices, and coefficients are coerced to Fraction.
    """
    kept = {i: tuple(ss) for i, ss in terms.items() if ss}
    order = {
        i: sorted(range(len(ss)), key=lambda r: ss[r]) for i, ss in kept.items()
    }
    out_terms = {
        i: tuple((int(ss[r][0]), int(ss[r][1])) for r in order[i])
        for i, ss in kept.items()
    }
    out_diffs = {}
    for i in out_terms:
        if i + 1 not in out_terms:
            continue
        raw = diffs.get(i, ())
        if raw:
            assert len(raw) == len(kept[i])
            assert all(len(row) == len(kept[i + 1]) for row in raw)
            mat = tuple(
                tuple(_normalize_entry(raw[r][cc]) for cc in order[i + 1])
                for r in order[i]
            )
        else:
            mat = tuple(((),) * len(kept[i + 1]) for _ in kept[i])
        out_diffs[i] = mat
    for i, raw in diffs.items():
        if i not in out_diffs:
            # a matrix between dropped or missing degrees must be zero
            assert all(not entry for row in raw for entry in row)
    c = Complex(out_terms, out_diffs)
    _check_complex(A, c)
    return c


def projective_complex(A: ZigzagAlgebra, v, k: int = 0, i: int = 0) -> Complex:
    """The one-summand complex P_v<k> placed in cohomological degree i."""
    v = _vertex_index(A, v)
    return make_complex(A, {i: ((v, k),)}, {})


def gaussian_eliminate(A: ZigzagAlgebra, c: Complex, rng=None) -> Complex:
    """Minimal form: strike out idempotent entries one at a time.

    Pivots are taken lowest degree first, then row-major; pass an rng to
    pick pivots at random instead (the summand multiset must not care).
    """
    terms = {i: list(ss) for i, ss in c.terms.items()}
    diffs = {i: [list(row) for row in mat] for i, mat in c.diffs.items()}

    def pivots(i: int, first_only: bool):
        found = []
        for r, row in enumerate(diffs[i]):
            for cc, entry in enumerate(row):
                if any(A.basis[b][0] == "e" for b, _ in entry):
                    found.append((i, r, cc))
                    if first_only:
                        return found
        return found

    def eliminate(i: int, r: int, c0: int) -> None:
        mat = diffs[i]
        # an entry containing an idempotent is exactly one e-term
        ((_, a),) = mat[r][c0]
        inv = -1 / a
        hot = [c2 for c2 in range(len(mat[r])) if c2 != c0 and mat[r][c2]]
        for r2 in range(len(mat)):
            if r2 == r or not mat[r2][c0]:
                continue
            left = mat[r2][c0]
            for c2 in hot:
                corr = _scale_combo(multiply_combo(A, left, mat[r][c2]), inv)
                mat[r2][c2] = _add_combo(mat[r2][c2], corr)
        del terms[i][r]
        del terms[i + 1][c0]
        del mat[r]
        for row in mat:
            del row[c0]
        if i - 1 in diffs:
            for row in diffs[i - 1]:
                del row[r]
        if i + 1 in diffs:
            del diffs[i + 1][c0]

    if rng is None:
        for i in sorted(diffs):
            while True:
                found = pivots(i, True)
                if not found:
                    break
                eliminate(*found[0])
    else:
        while True:
            found = [p for i in sorted(diffs) for p in pivots(i, False)]
            if not found:
                break
            eliminate(*rng.choice(found))

    return make_complex(A, terms, diffs)


def _paths_from(A: ZigzagAlgebra, v: int) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for b in range(A.dim):
        if A.source(b) == v:
            out.setdefault(A.target(b), []).append(b)
    return out


def twist(A: ZigzagAlgebra, v, c: Complex, eliminate: bool = True) -> Complex:
    """Spherical twist at an unfolded vertex: the cone of the counit
    P_v (x) Hom(P_v, c) -> c, with the new summands one degree down."""
    v = _vertex_index(A, v)
    paths = _paths_from(A, v)
    e_v = A._basis_index[("e", v)]
    # cone[i] lists (row r of c.terms[i+1], path p from v to that summand)
    cone: dict[int, list[tuple[int, int]]] = {}
    for i, summands in c.terms.items():
        added = [
            (r, p)
            for r, (u, _) in enumerate(summands)
            for p in paths.get(u, ())
        ]
        if added:
            cone[i - 1] = added
    terms = {}
    for i in set(c.terms) | set(cone):
        extra = tuple(
            (v, c.terms[i + 1][r][1] + A.degree(p)) for r, p in cone.get(i, ())
        )
        terms[i] = c.terms.get(i, ()) + extra
    diffs = {}
    for i in terms:
        if i + 1 not in terms:
            continue
        old_cols = c.terms.get(i + 1, ())
        oldmat = c.diffs.get(i)
        dmat = c.diffs.get(i + 1)
        mat = []
        for r in range(len(c.terms.get(i, ()))):
            row = [oldmat[r][cc] if oldmat else () for cc in range(len(old_cols))]
            row.extend(() for _ in cone.get(i + 1, ()))
            mat.append(row)
        for r, p in cone.get(i, ()):
            # counit component: right multiplication by the path itself
            row = [((p, ONE),) if cc == r else () for cc in range(len(old_cols))]
            for r2, p2 in cone.get(i + 1, ()):
                delta = dmat[r][r2] if dmat else ()
                prod = multiply_combo(A, ((p, ONE),), delta)
                co = next((co for b, co in prod if b == p2), None)
                row.append(((e_v, -co),) if co else ())
            mat.append(row)
        diffs[i] = mat
    out = make_complex(A, terms, diffs)
    return gaussian_eliminate(A, out) if eliminate else out


def dual_twist(A: ZigzagAlgebra, v, c: Complex, eliminate: bool = True) -> Complex:
    """Inverse twist: the cone of the unit c -> P_v (x) Hom(P_v, c),
    with the new summands one degree up and an internal shift by -2."""
    v = _vertex_index(A, v)
    paths = _paths_from(A, v)
    e_v = A._basis_index[("e", v)]
    # partner[y] = x over the comultiplication terms x (x) y at v
    partner = {
        y: x for pairs in frobenius_comult(A, v).values() for x, y in pairs
    }
    cone: dict[int, list[tuple[int, int]]] = {}
    for i, summands in c.terms.items():
        added = [
            (r, y)
            for r, (u, _) in enumerate(summands)
            for y in paths.get(u, ())
        ]
        if added:
            cone[i + 1] = added
    terms = {}
    for i in set(c.terms) | set(cone):
        extra = tuple(
            (v, c.terms[i - 1][r][1] - 2 + A.degree(y))
            for r, y in cone.get(i, ())
        )
        terms[i] = c.terms.get(i, ()) + extra
    diffs = {}
    for i in terms:
        if i + 1 not in terms:
            continue
        old_cols = c.terms.get(i + 1, ())
        oldmat = c.diffs.get(i)
        prevmat = c.diffs.get(i - 1)
        mat = []
        for r in range(len(c.terms.get(i, ()))):
            row = [oldmat[r][cc] if oldmat else () for cc in range(len(old_cols))]
            # unit component: the comultiplication partner of each column
            for r2, y2 in cone.get(i + 1, ()):
                row.append(((partner[y2], ONE),) if r2 == r else ())
            mat.append(row)
        for r, y in cone.get(i, ()):
            row: list[Combo] = [() for _ in range(len(old_cols))]
            for r2, y2 in cone.get(i + 1, ()):
                delta = prevmat[r][r2] if prevmat else ()
                prod = multiply_combo(A, ((y, ONE),), delta)
                co = next((co for b, co in prod if b == y2), None)
                row.append(((e_v, -co),) if co else ())
            mat.append(row)
        diffs[i] = mat
    out = make_complex(A, terms, diffs)
    return gaussian_eliminate(A, out) if eliminate else out


def _braid_letters(word) -> tuple[tuple[str, int], ...]:
    letters = []
    for letter in word:
        if isinstance(letter, str):
            letters.append((letter, 1))
            continue
        name, exp = letter
        if exp not in (1, -1):
            raise ValueError(f"twist letters need exponent +1 or -1, got {exp!r}")
        letters.append((name, exp))
    return tuple(letters)


def _apply_letters(A, u, letters, c: Complex) -> Complex:
    for name, exp in letters:
        op = twist if exp == 1 else dual_twist
        for pair in fiber(u, name):
            c = op(A, u.index(pair), c)
    return c


def apply_braid_word(A: ZigzagAlgebra, u: UnfoldedGraph, word, c: Complex) -> Complex:
    """Act by a word in the base generators, first letter first; each
    letter twists (or untwists) along every vertex of its fiber."""
    return _apply_letters(A, u, _braid_letters(word), c)


def complex_class(A: ZigzagAlgebra, c: Complex):
    """Lattice class: per vertex, the Laurent coefficients as sorted
    (exponent, coefficient) pairs; summand (v,k) at degree i counts
    (-1)^i q^k."""
    acc: list[dict[int, int]] = [{} for _ in A.quiver.vertices]
    for i, summands in c.terms.items():
        sign = -1 if i % 2 else 1
        for v, k in summands:
            acc[v][k] = acc[v].get(k, 0) + sign
    return tuple(
        tuple((e, co) for e, co in sorted(d.items()) if co) for d in acc
    )


def is_identity_word(A: ZigzagAlgebra, u: UnfoldedGraph, word) -> bool:
    """Whether the word acts trivially on every projective.  This
    decides equality in the group generated by the twists themselves."""
    letters = _braid_letters(word)
    return all(
        _apply_letters(A, u, letters, projective_complex(A, x))
        == projective_complex(A, x)
        for x in range(len(u.vertices))
    )


def recognize_shift(A: ZigzagAlgebra, u: UnfoldedGraph, word, pure: bool = False):
    """(a, b) when the word acts as the shift [a]<b> on every
    projective, None otherwise; pure mode only accepts b = 0."""
    letters = _braid_letters(word)
    result = None
    for x in range(len(u.vertices)):
        out = _apply_letters(A, u, letters, projective_complex(A, x))
        if len(out.terms) != 1:
            return None
        ((deg, summands),) = out.terms.items()
        if len(summands) != 1:
            return None
        v, k = summands[0]
        if v != x or (pure and k != 0):
            return None
        if result is None:
            result = (-deg, k)
        elif result != (-deg, k):
            return None
    return result


def words_equal(A: ZigzagAlgebra, u: UnfoldedGraph, first, second) -> bool:
    """Compare two words by checking that first . second^{-1} acts
    trivially."""
    inv = tuple(
        (name, -exp) for name, exp in reversed(_braid_letters(second))
    )
    return is_identity_word(A, u, _braid_letters(first) + inv)
