"""Command-line surface binding the graph, algebra, and geometry layers.

Every command reads a Coxeter graph JSON file and writes a deterministic
report to stdout: identical inputs give byte-identical output.  Exit
codes are 0 for success or an affirmative answer, 1 for usage and input
errors, 2 for computation failures (inconclusive verdicts, exhausted
step budgets, charges outside the tractable region), and 3 for a
negative decision.

The word-problem commands (word-eq, is-identity, shift-type,
check-relations) decide equality in the group generated by the
spherical twists acting on complexes of graded projectives; answers are
statements about that twist group.

Structured outputs are JSON with a fixed key order and floats rounded
to 15 significant digits.  Long computations report progress on stderr
only, keeping stdout parseable.  The environment variable
COXTWIST_MAX_ITER overrides the step budget of the geometry commands.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .coxgraph import INF, CoxeterGraph, GraphError, parse_graph
from .fusion import FusionElement, FusionRing, coxeter_fusion_ring, multiply
from .geometry import CentralCharge, in_regular_set, in_tits_interior, locate_chamber
from .homotopy import (
    apply_braid_word,
    is_identity_word,
    projective_complex,
    recognize_shift,
    words_equal,
)
from .lattice import burau_word, coxeter_word_equal, root_layers, specialize_q
from .unfolding import UnfoldedGraph, unfold
from .zigzag import ZigzagAlgebra, build_zigzag, multiply_basis, path_label

_TWIST_NOTE = (
    "Equality is decided in the group generated by the spherical twists "
    "acting on complexes of projectives."
)


@dataclass(frozen=True)
class CommandResult:
    """Exit code plus the full stdout payload of one invocation."""

    exit_code: int
    stdout: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would sys.exit(2) on bad flags; remap onto exit code 1
    def error(self, message):
        raise _UsageError(message)


_DECISION_EXIT = {"yes": 0, "no": 3, "inconclusive": 2}


# ---------------------------------------------------------------- loading


def _load_graph(path: str) -> CoxeterGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_word(text: str, inverses: bool = True) -> tuple:
    """Split a whitespace word into letters; only the ^-1 suffix is allowed."""
    letters: list = []
    for tok in text.split():
        if tok.endswith("^-1"):
            name = tok[:-3]
            if not inverses:
                raise _UsageError(f"inverse letter {tok!r} in a Coxeter word")
            if not name or "^" in name:
                raise _UsageError(f"bad word letter {tok!r}")
            letters.append((name, -1))
        elif "^" in tok:
            raise _UsageError(f"bad word letter {tok!r} (only a ^-1 suffix is allowed)")
        else:
            letters.append(tok)
    return tuple(letters)


def _load_charges(path: str, g: CoxeterGraph) -> tuple[complex, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise _UsageError(f"invalid charge JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise _UsageError("charge file must map vertex names to [re, im] pairs")
    extra = sorted(set(doc) - set(g.vertices))
    if extra:
        raise _UsageError("charge file names unknown vertices: " + ", ".join(extra))
    missing = [v for v in g.vertices if v not in doc]
    if missing:
        raise _UsageError("charge file is missing vertices: " + ", ".join(missing))
    values = []
    for v in g.vertices:
        pair = doc[v]
        ok = (
            isinstance(pair, list)
            and len(pair) == 2
            and all(
                isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair
            )
        )
        if not ok:
            raise _UsageError(f"charge for {v!r} must be a [re, im] pair")
        values.append(complex(pair[0], pair[1]))
    return tuple(values)


def _env_max_iter():
    raw = os.environ.get("COXTWIST_MAX_ITER")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(
            f"COXTWIST_MAX_ITER must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise _UsageError("COXTWIST_MAX_ITER must be nonnegative")
    return value


# ------------------------------------------------------------- formatting


def _f15(x: float) -> float:
    # 15 significant digits, with -0.0 folded into 0.0
    return float(f"{x:.15g}") + 0.0


def _fmt_element(ring: FusionRing, elt: FusionElement) -> str:
    parts = []
    for c, lab in zip(elt.coefficients, ring.basis):
        if not c:
            continue
        if c == 1:
            parts.append(lab)
        elif c == -1:
            parts.append("-" + lab)
        else:
            parts.append(f"{c}*{lab}")
    return " + ".join(parts) if parts else "0"


def _fmt_laurent_entry(ring: FusionRing, entry) -> str:
    if not entry:
        return "0"
    chunks = []
    for exp, elt in entry:
        qs = "" if exp == 0 else "q" if exp == 1 else f"q^{exp}"
        body = _fmt_element(ring, elt)
        if not qs:
            chunks.append(body)
        elif " + " in body:
            chunks.append(f"{qs}*({body})")
        elif body.startswith("-"):
            chunks.append(f"-{qs}*{body[1:]}")
        else:
            chunks.append(f"{qs}*{body}")
    return " + ".join(chunks)


def _fmt_combo(A: ZigzagAlgebra, combo) -> str:
    parts = []
    for b, co in combo:
        lab = path_label(A, b)
        if co == 1:
            parts.append(lab)
        elif co == -1:
            parts.append("-" + lab)
        else:
            parts.append(f"{co}*{lab}")
    return " + ".join(parts) if parts else "0"


def _vertex_name(A: ZigzagAlgebra, v: int) -> str:
    base, lab = A.quiver.vertices[v]
    return base if A.quiver.ring.rank == 1 else f"({base},{lab})"


# ----------------------------------------------------------- act grammar

_DEG_LINE = re.compile(r"^deg (-?\d+): (.*)$")
_SUMMAND = re.compile(r"^P\[(.+)\]<(-?\d+)>$")
_DIFF_LINE = re.compile(r"^d\[(-?\d+)\]\[(\d+)->(\d+)\] = (.*)$")


def read_act_output(text: str) -> dict:
    """Parse `act` output back into summand and differential tables.

    Returns {"terms": {deg: [(vertex name, internal shift), ...]},
    "diffs": {deg: {(row, col): [(coefficient, path label), ...]}}}.
    """
    terms: dict = {}
    diffs: dict = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line == "empty":
            continue
        m = _DEG_LINE.match(line)
        if m:
            summands = []
            for part in m.group(2).split(" + "):
                sm = _SUMMAND.match(part)
                if sm is None:
                    raise ValueError(f"bad summand {part!r}")
                summands.append((sm.group(1), int(sm.group(2))))
            terms[int(m.group(1))] = summands
            continue
        m = _DIFF_LINE.match(line)
        if m is None:
            raise ValueError(f"unrecognized line {line!r}")
        entry = []
        for part in m.group(4).split(" + "):
            if "*" in part:
                co, lab = part.split("*", 1)
                entry.append((Fraction(co), lab))
            elif part.startswith("-"):
                entry.append((Fraction(-1), part[1:]))
            else:
                entry.append((Fraction(1), part))
        i, r, c = int(m.group(1)), int(m.group(2)), int(m.group(3))
        diffs.setdefault(i, {})[(r, c)] = entry
    return {"terms": terms, "diffs": diffs}


# --------------------------------------------------------------- commands


def _cmd_fusion_table(args, out) -> int:
    g = _load_graph(args.graph)
    ring = coxeter_fusion_ring(g)
    print(f"rank: {ring.rank}", file=out)
    print("simples: " + " ".join(ring.basis), file=out)
    for lab, d in zip(ring.basis, ring.fpdim):
        print(f"fpdim {lab}: {d:.15g}", file=out)
    for i, a in enumerate(ring.basis):
        for j, b in enumerate(ring.basis):
            prod = multiply(
                ring, FusionElement.simple(ring, i), FusionElement.simple(ring, j)
            )
            print(f"{a} * {b} = {_fmt_element(ring, prod)}", file=out)
    return 0


def _cmd_unfold(args, out) -> int:
    g = _load_graph(args.graph)
    u = unfold(g)
    doc = u.as_coxeter_graph().to_json_dict()
    if args.emit_folding:
        doc["folding"] = {u.names[k]: u.fold(k) for k in range(len(u.vertices))}
    print(json.dumps(doc, indent=2), file=out)
    return 0


def _cmd_zigzag_info(args, out) -> int:
    g = _load_graph(args.graph)
    u = unfold(g)
    A = build_zigzag(u)
    print(f"vertices: {len(u.vertices)}", file=out)
    print(f"dimension: {A.dim}", file=out)
    print("basis:", file=out)
    for k in range(A.dim):
        print(f"[{k}] {path_label(A, k)} (deg {A.degree(k)})", file=out)
    print("products (zeros omitted):", file=out)
    for i in range(A.dim):
        for j in range(A.dim):
            prod = multiply_basis(A, i, j)
            if prod:
                lhs = f"{path_label(A, i)} * {path_label(A, j)}"
                print(f"{lhs} = {_fmt_combo(A, prod)}", file=out)
    return 0


def _cmd_burau(args, out) -> int:
    g = _load_graph(args.graph)
    ring = coxeter_fusion_ring(g)
    mat = burau_word(g, ring, _parse_word(args.word))
    if args.q_eval is not None:
        try:
            value = Fraction(args.q_eval)
        except (ValueError, ZeroDivisionError):
            raise _UsageError(
                f"--q-eval needs a rational number, got {args.q_eval!r}"
            ) from None
        rows = specialize_q(mat, value)
        print(f"size: {len(rows)}", file=out)
        for r, row in enumerate(rows):
            print(f"row {r}: " + " ".join(str(v) for v in row), file=out)
        return 0
    print(f"size: {mat.size}", file=out)
    for r in range(mat.size):
        for c in range(mat.size):
            print(f"[{r},{c}] = {_fmt_laurent_entry(ring, mat.entries[r][c])}", file=out)
    return 0


def _cmd_roots(args, out) -> int:
    if args.depth < 1:
        raise _UsageError("--depth must be at least 1")
    g = _load_graph(args.graph)
    ring = coxeter_fusion_ring(g)
    layers = root_layers(g, ring, args.depth)
    # one extra layer tells whether the enumeration was exhaustive
    probe = root_layers(g, ring, args.depth + 1)
    roots = sorted(r.coefficients for layer in layers for r in layer)
    print(f"depth: {args.depth}", file=out)
    print(f"count: {len(roots)}", file=out)
    print("truncated: " + ("yes" if len(probe) > len(layers) else "no"), file=out)
    for coeffs in roots:
        print("root: " + " ".join(str(c) for c in coeffs), file=out)
    return 0


def _cmd_coxeter_eq(args, out) -> int:
    g = _load_graph(args.graph)
    w1 = _parse_word(args.first, inverses=False)
    w2 = _parse_word(args.second, inverses=False)
    same = coxeter_word_equal(g, w1, w2)
    print("equal" if same else "not equal", file=out)
    return 0 if same else 3


def _zigzag_setup(path: str):
    g = _load_graph(path)
    u = unfold(g)
    return g, u, build_zigzag(u)


def _cmd_word_eq(args, out) -> int:
    _, u, A = _zigzag_setup(args.graph)
    same = words_equal(A, u, _parse_word(args.first), _parse_word(args.second))
    print("equal" if same else "not equal", file=out)
    return 0 if same else 3


def _cmd_is_identity(args, out) -> int:
    _, u, A = _zigzag_setup(args.graph)
    same = is_identity_word(A, u, _parse_word(args.word))
    print("identity" if same else "not identity", file=out)
    return 0 if same else 3


def _cmd_shift_type(args, out) -> int:
    _, u, A = _zigzag_setup(args.graph)
    res = recognize_shift(A, u, _parse_word(args.word), pure=args.pure)
    if res is None:
        print("not a shift", file=out)
        return 3
    a, b = res
    print(f"shift: [{a}]<{b}>", file=out)
    return 0


def _resolve_on(u: UnfoldedGraph, target: str) -> int:
    if "," in target:
        return u.index(target)
    hits = [k for k, (base, _) in enumerate(u.vertices) if base == target]
    if not hits:
        raise GraphError(f"unknown vertex {target!r}")
    if len(hits) > 1:
        names = ", ".join(u.names[k] for k in hits)
        raise _UsageError(f"--on {target!r} is ambiguous; pick one of: {names}")
    return hits[0]


def _cmd_act(args, out) -> int:
    _, u, A = _zigzag_setup(args.graph)
    letters = _parse_word(args.word)
    c = projective_complex(A, _resolve_on(u, args.on), args.shift, args.deg)
    result = apply_braid_word(A, u, letters, c)
    if not result.terms:
        print("empty", file=out)
        return 0
    for i in sorted(result.terms):
        summands = " + ".join(
            f"P[{_vertex_name(A, v)}]<{k}>" for v, k in result.terms[i]
        )
        print(f"deg {i}: {summands}", file=out)
    for i in sorted(result.diffs):
        for r, row in enumerate(result.diffs[i]):
            for c2, entry in enumerate(row):
                if entry:
                    print(f"d[{i}][{r}->{c2}] = {_fmt_combo(A, entry)}", file=out)
    return 0


def _geometry_graph(args):
    g = _load_graph(args.graph)
    if getattr(args, "full", False):
        g = unfold(g).as_coxeter_graph()
    return g, coxeter_fusion_ring(g)


def _cmd_chamber(args, out) -> int:
    g, ring = _geometry_graph(args)
    z = CentralCharge(_load_charges(args.charge, g), full=bool(args.full))
    rep = locate_chamber(g, ring, z, max_iter=_env_max_iter(), depth=args.depth)
    doc = {
        "status": rep.status,
        "phase": [_f15(rep.phase.real), _f15(rep.phase.imag)],
        "word": list(rep.word),
        "charge": {
            name: [_f15(v.real), _f15(v.imag)]
            for name, v in zip(g.vertices, rep.charge.values)
        },
    }
    print(json.dumps(doc, indent=2), file=out)
    return 0 if rep.status == "located" else 2


def _cmd_regular_check(args, out) -> int:
    g, ring = _geometry_graph(args)
    z = CentralCharge(_load_charges(args.charge, g), full=bool(args.full))
    res = in_regular_set(g, ring, z, depth=args.depth)
    print(json.dumps({"result": res}, indent=2), file=out)
    return _DECISION_EXIT[res]


def _cmd_tits_check(args, out) -> int:
    g, ring = _geometry_graph(args)
    values = _load_charges(args.charge, g)
    if any(v.imag != 0 for v in values):
        raise _UsageError("tits-check needs real charge values ([re, 0] pairs)")
    x = tuple(v.real for v in values)
    res = in_tits_interior(g, ring, x, depth=args.depth, max_iter=_env_max_iter())
    print(json.dumps({"result": res}, indent=2), file=out)
    return _DECISION_EXIT[res]


def _alternating(s: str, t: str, m: int) -> tuple:
    return tuple(s if k % 2 == 0 else t for k in range(m))


def _cmd_check_relations(args, out) -> int:
    g, u, A = _zigzag_setup(args.graph)
    checks = []
    for i in range(g.rank):
        for j in range(i + 1, g.rank):
            s, t = g.vertices[i], g.vertices[j]
            m = g.label(i, j)
            if m == 2:
                ok = words_equal(A, u, (s, t), (t, s))
                checks.append((f"commute {s} {t}", ok))
            elif m == INF:
                ok = not words_equal(A, u, (s, t), (t, s))
                checks.append((f"distinguish {s} {t} m=inf", ok))
            else:
                ok = words_equal(A, u, _alternating(s, t, m), _alternating(t, s, m))
                checks.append((f"braid {s} {t} m={m}", ok))
    for s in g.vertices:
        ok = is_identity_word(A, u, ((s, 1), (s, -1))) and is_identity_word(
            A, u, ((s, -1), (s, 1))
        )
        checks.append((f"inverse {s}", ok))
    for desc, ok in checks:
        print(f"{desc}: {'pass' if ok else 'fail'}", file=out)
    return 0 if all(ok for _, ok in checks) else 3


# ----------------------------------------------------------------- driver


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="coxtwist",
        description="Coxeter-graph engine: fusion rings, zigzag algebras, "
        "spherical twists, Burau matrices, and central-charge chambers.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    def add(name, handler, text):
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("graph", help="path to a Coxeter graph JSON file")
        p.set_defaults(handler=handler)
        return p

    add("fusion-table", _cmd_fusion_table, "print the fusion ring of the graph")

    p = add("unfold", _cmd_unfold, "print the unfolded graph as JSON")
    p.add_argument(
        "--emit-folding",
        action="store_true",
        help="include the unfolded-to-base vertex map",
    )

    add(
        "zigzag-info",
        _cmd_zigzag_info,
        "print the zigzag algebra basis and its nonzero products",
    )

    p = add("burau", _cmd_burau, "print the Burau matrix of a braid word")
    p.add_argument("word", help='braid word as one argument, e.g. "s t s^-1"')
    p.add_argument(
        "--q-eval",
        metavar="VALUE",
        help="evaluate q at a rational number and print the lattice matrix",
    )

    p = add("roots", _cmd_roots, "enumerate positive roots layer by layer")
    p.add_argument("--depth", type=int, default=8, help="reflection-layer bound")

    p = add(
        "coxeter-eq",
        _cmd_coxeter_eq,
        "decide whether two positive words agree in the Coxeter group",
    )
    p.add_argument("first", help="first word")
    p.add_argument("second", help="second word, separated by --")

    p = add(
        "word-eq",
        _cmd_word_eq,
        "decide whether two braid words agree; " + _TWIST_NOTE,
    )
    p.add_argument("first", help="first braid word")
    p.add_argument("second", help="second braid word, separated by --")

    p = add(
        "is-identity",
        _cmd_is_identity,
        "decide whether a braid word acts trivially; " + _TWIST_NOTE,
    )
    p.add_argument("word", help="braid word as one argument")

    p = add(
        "shift-type",
        _cmd_shift_type,
        "report [a]<b> when the word acts as a shift; " + _TWIST_NOTE,
    )
    p.add_argument("word", help="braid word as one argument")
    p.add_argument(
        "--pure", action="store_true", help="only accept internal shift 0"
    )

    p = add("act", _cmd_act, "apply a braid word to a projective and print the complex")
    p.add_argument("word", help="braid word; the empty string is the identity")
    p.add_argument(
        "--on",
        required=True,
        metavar="VERTEX[,SIMPLE]",
        help="target projective; the bare vertex form needs a one-point fiber",
    )
    p.add_argument("--shift", type=int, default=0, help="internal shift of the start")
    p.add_argument("--deg", type=int, default=0, help="homological degree of the start")

    geom_note = (
        "  The step budget honors the COXTWIST_MAX_ITER environment variable."
    )

    p = add(
        "chamber",
        _cmd_chamber,
        "normalize a central charge and descend it to the fundamental chamber."
        + geom_note,
    )
    p.add_argument("--charge", required=True, help="JSON file: vertex -> [re, im]")
    p.add_argument("--full", action="store_true", help="charge lives on the unfolding")
    p.add_argument("--depth", type=int, default=8, help="root enumeration bound")

    p = add(
        "regular-check",
        _cmd_regular_check,
        "test whether a charge avoids all root hyperplanes up to the depth bound",
    )
    p.add_argument("--charge", required=True, help="JSON file: vertex -> [re, im]")
    p.add_argument("--full", action="store_true", help="charge lives on the unfolding")
    p.add_argument("--depth", type=int, default=8, help="root enumeration bound")

    p = add(
        "tits-check",
        _cmd_tits_check,
        "test whether a real functional lies in the Tits cone interior." + geom_note,
    )
    p.add_argument("--charge", required=True, help="JSON file: vertex -> [re, 0]")
    p.add_argument("--full", action="store_true", help="charge lives on the unfolding")
    p.add_argument("--depth", type=int, default=8, help="root enumeration bound")

    add(
        "check-relations",
        _cmd_check_relations,
        "run the braid/commutation/inverse property suite; " + _TWIST_NOTE,
    )

    return parser


def run(argv) -> CommandResult:
    """Dispatch one command line; never raises, never calls sys.exit."""
    buf = io.StringIO()
    parser = _build_parser()
    try:
        with contextlib.redirect_stdout(buf):
            args = parser.parse_args(list(argv))
            code = args.handler(args, buf)
    except SystemExit as exc:  # argparse --help
        return CommandResult(0 if exc.code in (0, None) else 1, buf.getvalue())
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("run 'coxtwist --help' for usage", file=sys.stderr)
        return CommandResult(1, buf.getvalue())
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandResult(1, buf.getvalue())
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandResult(2, buf.getvalue())
    return CommandResult(code, buf.getvalue())


def main() -> None:
    result = run(sys.argv[1:])
    sys.stdout.write(result.stdout)
    raise SystemExit(result.exit_code)
