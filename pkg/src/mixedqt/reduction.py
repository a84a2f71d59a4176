"""Compiling Monotone NAE3SAT instances into graph-orientability instances.

Each clause becomes a fixed 9-vertex gadget whose three literal vertices are
forced to be sources or sinks in every quasi-transitive partial orientation;
the achievable source/sink patterns are exactly the non-constant triples, so
a clause gadget encodes "not all equal".  Each variable becomes a path long
enough to thread through every clause, oriented alternately so that all even
positions share the truth value of the path root.  Identifying literal
vertices with even path positions ties the two together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formats import GraphFormatError
from .graphs import Edge, Graph, MixedGraph, edge
from .solver import (
    Signature,
    VertexStatus,
    WitnessError,
    enumerate_qt,
    verify_witness,
    vertex_status,
)

# The clause gadget: a 6-path 0-1-2-3-4-5 with a hub 6 joined to 1,2,3,4, a
# second hub 7 joined to 2,3,6, and pendant edges 0-1, 7-8, 4-5.  The
# literal vertices are (0, 7, 5): the two path tips and the hub 7, each
# carrying a pendant edge towards its mate in (1, 8, 4).  The map
# (0 5)(1 4)(2 3) is an automorphism exchanging the first and third
# literals and fixing the second.  Over this triple the achievable
# source/sink signatures are exactly the six non-constant ones; reading
# signatures anywhere else (for example at the mates 1 and 4) admits
# constant patterns and breaks the clause encoding.
GADGET_EDGES: frozenset[Edge] = frozenset({
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
    (1, 6), (2, 6), (3, 6), (4, 6),
    (6, 7), (2, 7), (3, 7), (7, 8),
})
GADGET_LITERALS = (0, 7, 5)
GADGET_PENDANT_MATES = (1, 8, 4)
# After the literal tips 0 and 5 are identified into variable paths, their
# pendant edges become the gadget's attachment and cannot be dropped; the
# pendant at the middle literal (edge 7-8) stays a true pendant and is the
# one removed by the drop-pendants variant, capping the degree of an
# identified middle literal at five.
_DROPPABLE_PENDANT: Edge = (7, 8)

CONSTANT_SIGNATURES: tuple[Signature, Signature] = (("+", "+", "+"), ("-", "-", "-"))


def clause_gadget() -> tuple[Graph, tuple[int, int, int], tuple[int, int, int]]:
    """The clause gadget with its literal triple and their pendant mates."""
    return Graph(9, GADGET_EDGES), GADGET_LITERALS, GADGET_PENDANT_MATES


def _gadget_graph(drop_pendants: bool) -> Graph:
    if drop_pendants:
        return Graph(9, GADGET_EDGES - {_DROPPABLE_PENDANT})
    return Graph(9, GADGET_EDGES)


def _literal_signature(mixed: MixedGraph) -> Signature | None:
    """Signature over the literal triple, or None when some literal is
    neither a source nor a sink (possible only without pendants)."""
    comps = []
    for v in GADGET_LITERALS:
        st = vertex_status(mixed, v)
        if st is VertexStatus.SOURCE:
            comps.append("+")
        elif st is VertexStatus.SINK:
            comps.append("-")
        else:
            return None
    return (comps[0], comps[1], comps[2])


@dataclass(frozen=True)
class GadgetSignatureReport:
    """Census of achievable literal signatures over all gadget orientations."""

    signatures: frozenset[Signature]
    constant_counts: tuple[int, int]  # orientations with (+,+,+) resp. (-,-,-)
    orientation_count: int
    signature_counts: tuple[tuple[Signature, int], ...] = ()
    unsigned_count: int = 0  # orientations with a non-source/sink literal


def gadget_signature_report(*, drop_pendants: bool = False) -> GadgetSignatureReport:
    """Enumerate every orientation of the gadget and collect signatures.

    Covers the full 3^m state space of the 13-edge gadget (the enumeration
    prunes with rules that discard no valid orientation).
    """
    counts: dict[Signature, int] = {}
    unsigned = 0
    total = 0
    for po in enumerate_qt(_gadget_graph(drop_pendants)):
        total += 1
        sig = _literal_signature(po.mixed)
        if sig is None:
            unsigned += 1
        else:
            counts[sig] = counts.get(sig, 0) + 1
    return GadgetSignatureReport(
        signatures=frozenset(counts),
        constant_counts=(counts.get(CONSTANT_SIGNATURES[0], 0),
                         counts.get(CONSTANT_SIGNATURES[1], 0)),
        orientation_count=total,
        signature_counts=tuple(sorted(counts.items())),
        unsigned_count=unsigned,
    )


_template_cache: dict[bool, dict[Signature, MixedGraph]] = {}


def gadget_templates(drop_pendants: bool = False) -> dict[Signature, MixedGraph]:
    """One gadget orientation per achievable signature (first in enumeration
    order), used to orient clause gadgets from truth values."""
    if drop_pendants not in _template_cache:
        templates: dict[Signature, MixedGraph] = {}
        for po in enumerate_qt(_gadget_graph(drop_pendants)):
            sig = _literal_signature(po.mixed)
            if sig is not None and sig not in templates:
                templates[sig] = po.mixed
                if len(templates) == 6:
                    break
        _template_cache[drop_pendants] = templates
    return dict(_template_cache[drop_pendants])


# ---------------------------------------------------------------------------
# Instances and the brute-force oracle

@dataclass(frozen=True)
class CnfInstance:
    """A monotone 3-CNF formula: clauses are triples of distinct variables.

    Variables are numbered 1..num_vars; there are no negated literals.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly three literals")
            if len(set(c)) != 3:
                raise ValueError(f"clause {c} repeats a variable")
            for x in c:
                if x < 1:
                    raise ValueError(f"literal {x} is not a positive variable; "
                                     "instances must be monotone")
                if x > self.num_vars:
                    raise ValueError(f"variable {x} exceeds declared count {self.num_vars}")


Assignment = dict[int, bool]


def is_nae_satisfying(y: CnfInstance, f: Assignment) -> bool:
    """True when f is total and every clause sees both truth values."""
    if set(f) != set(range(1, y.num_vars + 1)):
        return False
    return all(len({f[a], f[b], f[c]}) == 2 for a, b, c in y.clauses)


BRUTE_VAR_CAP = 24


def brute_nae(y: CnfInstance) -> Assignment | None:
    """Scan all 2^n assignments for a not-all-equal satisfying one.

    Deterministic: the assignment with the smallest bit pattern (variable x
    on bit x-1) is returned.  The empty formula yields the all-false
    assignment.
    """
    if y.num_vars > BRUTE_VAR_CAP:
        raise ValueError(f"brute-force oracle capped at {BRUTE_VAR_CAP} variables")
    masks = [(1 << (a - 1)) | (1 << (b - 1)) | (1 << (c - 1)) for a, b, c in y.clauses]
    for bits in range(1 << y.num_vars):
        if all(0 < bits & cm < cm for cm in masks):
            return {x: bool(bits >> (x - 1) & 1) for x in range(1, y.num_vars + 1)}
    return None


# ---------------------------------------------------------------------------
# DIMACS input

def parse_dimacs(text: str) -> CnfInstance:
    """Parse monotone 3-CNF in DIMACS format (positive literals only)."""
    header: tuple[int, int] | None = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if header is not None or len(fields) != 4 or fields[1] != "cnf":
                raise GraphFormatError(f"line {lineno}: bad 'p cnf <vars> <clauses>' header")
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from None
            continue
        if header is None:
            raise GraphFormatError(f"line {lineno}: clause before header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer literal {tok!r}") from None
            if lit < 0:
                raise GraphFormatError(
                    f"line {lineno}: negated literal {lit}; instances must be monotone")
            tokens.append(lit)
    if header is None:
        raise GraphFormatError("missing 'p cnf' header")
    num_vars, num_clauses = header
    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    for lit in tokens:
        if lit == 0:
            if len(current) != 3:
                raise GraphFormatError(f"clause {tuple(current)} does not have three literals")
            clauses.append((current[0], current[1], current[2]))
            current = []
        else:
            current.append(lit)
    if current:
        raise GraphFormatError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise GraphFormatError(
            f"header declares {num_clauses} clauses, body has {len(clauses)}")
    try:
        return CnfInstance(num_vars, tuple(clauses))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_dimacs(y: CnfInstance) -> str:
    lines = [f"p cnf {y.num_vars} {len(y.clauses)}"]
    lines += [f"{a} {b} {c} 0" for a, b, c in y.clauses]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# The reduction graph

@dataclass(frozen=True)
class ReductionMap:
    """Bookkeeping tying an instance to the vertex ids of its reduction graph."""

    instance: CnfInstance
    drop_pendants: bool
    num_vertices: int
    var_paths: tuple[tuple[int, ...], ...]  # variable x at index x-1
    clause_literal_ids: tuple[tuple[int, int, int], ...]
    clause_gadget_ids: tuple[tuple[int | None, ...], ...]  # gadget vertex 0..8


def build_reduction(y: CnfInstance, *, drop_pendants: bool = False) -> tuple[Graph, ReductionMap]:
    """Assemble the reduction graph for a monotone NAE3SAT instance.

    One gadget per clause and one path of 2|C|+2 vertices per variable are
    laid down disjointly, then for clause k the literal vertices are
    identified with position 2k of the corresponding variable paths.  With
    ``drop_pendants`` the gadget pendant edges at literal vertices are
    omitted, which caps the maximum degree at five.
    """
    n_clauses = len(y.clauses)
    path_len = 2 * n_clauses + 2
    var_paths = tuple(
        tuple(range((x - 1) * path_len, x * path_len)) for x in range(1, y.num_vars + 1)
    )
    next_id = y.num_vars * path_len
    edges: set[Edge] = set()
    for ids in var_paths:
        for i in range(len(ids) - 1):
            edges.add(edge(ids[i], ids[i + 1]))
    gadget_edges = sorted(GADGET_EDGES - {_DROPPABLE_PENDANT} if drop_pendants
                          else GADGET_EDGES)
    fresh_gadget_vertices = [gv for gv in range(9)
                             if gv not in GADGET_LITERALS
                             and not (drop_pendants and gv == _DROPPABLE_PENDANT[1])]
    literal_ids = []
    gadget_ids = []
    for k, (a, b, c) in enumerate(y.clauses, start=1):
        mapping: dict[int, int] = {
            GADGET_LITERALS[0]: var_paths[a - 1][2 * k],
            GADGET_LITERALS[1]: var_paths[b - 1][2 * k],
            GADGET_LITERALS[2]: var_paths[c - 1][2 * k],
        }
        for gv in fresh_gadget_vertices:
            mapping[gv] = next_id
            next_id += 1
        for gu, gv in gadget_edges:
            edges.add(edge(mapping[gu], mapping[gv]))
        literal_ids.append(tuple(mapping[lv] for lv in GADGET_LITERALS))
        gadget_ids.append(tuple(mapping.get(gv) for gv in range(9)))
    graph = Graph(next_id, frozenset(edges))
    rm = ReductionMap(
        instance=y,
        drop_pendants=drop_pendants,
        num_vertices=next_id,
        var_paths=var_paths,
        clause_literal_ids=tuple(literal_ids),
        clause_gadget_ids=tuple(gadget_ids),
    )
    return graph, rm


def assignment_to_witness(y: CnfInstance, f: Assignment, rm: ReductionMap) -> MixedGraph:
    """Orient the reduction graph according to a not-all-equal assignment.

    Paths alternate with the root a source exactly for true variables;
    each gadget takes the stored template matching its clause's truth
    pattern.  Raises ValueError when some clause's literals are constant
    (no gadget template exists for a constant signature).
    """
    if y != rm.instance:
        raise ValueError("reduction map was built for a different instance")
    if set(f) != set(range(1, y.num_vars + 1)):
        raise ValueError("assignment is not total over the variables")
    arcs: set[tuple[int, int]] = set()
    edges: set[Edge] = set()
    for x in range(1, y.num_vars + 1):
        ids = rm.var_paths[x - 1]
        for i in range(len(ids) - 1):
            even_end, odd_end = (ids[i], ids[i + 1]) if i % 2 == 0 else (ids[i + 1], ids[i])
            arcs.add((even_end, odd_end) if f[x] else (odd_end, even_end))
    templates = gadget_templates(rm.drop_pendants)
    for k, clause in enumerate(y.clauses):
        truths = tuple(f[x] for x in clause)
        if len(set(truths)) == 1:
            raise ValueError(
                f"assignment is not NAE-satisfying: clause {clause} is constant")
        sig = tuple("+" if t else "-" for t in truths)
        template = templates[sig]  # type: ignore[index]
        mapping = rm.clause_gadget_ids[k]
        for gu, gv in template.edges:
            edges.add(edge(mapping[gu], mapping[gv]))
        for gt, gh in template.arcs:
            arcs.add((mapping[gt], mapping[gh]))
    return MixedGraph(rm.num_vertices, frozenset(edges), frozenset(arcs))


def witness_to_assignment(rm: ReductionMap, m: MixedGraph) -> Assignment:
    """Read an assignment off a witness: variable x is true exactly when its
    path root is a source.  The witness is verified first."""
    graph, _ = build_reduction(rm.instance, drop_pendants=rm.drop_pendants)
    check = verify_witness(graph, m)
    if not check.ok:
        raise WitnessError("; ".join(check.problems))
    f: Assignment = {}
    for x in range(1, rm.instance.num_vars + 1):
        root = rm.var_paths[x - 1][0]
        st = vertex_status(m, root)
        if st is VertexStatus.SOURCE:
            f[x] = True
        elif st is VertexStatus.SINK:
            f[x] = False
        else:
            raise WitnessError(f"path root {root} is {st.value}, not a source or sink")
    if not is_nae_satisfying(rm.instance, f):
        raise RuntimeError("internal error: extracted assignment is not NAE-satisfying")
    return f


# ---------------------------------------------------------------------------
# Reduction-map and assignment files

def serialize_reduction_map(rm: ReductionMap) -> str:
    lines = [f"c drop-pendants {int(rm.drop_pendants)}"]
    for k, (u, v, w) in enumerate(rm.clause_literal_ids, start=1):
        lines.append(f"clause {k} {u} {v} {w}")
    for x, ids in enumerate(rm.var_paths, start=1):
        lines.append(f"var {x} " + " ".join(str(i) for i in ids))
    return "\n".join(lines) + "\n"


def parse_reduction_map(text: str) -> ReductionMap:
    """Rebuild a reduction map from its serialised form.

    The instance is reconstructed from the identifications and the map is
    rebuilt from scratch; any inconsistency with the file is an error.
    """
    drop_pendants = False
    clause_lines: dict[int, tuple[int, int, int]] = {}
    var_lines: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "c":
            if len(fields) == 3 and fields[1] == "drop-pendants":
                drop_pendants = fields[2] == "1"
            continue
        try:
            if fields[0] == "clause" and len(fields) == 5:
                k, u, v, w = (int(t) for t in fields[1:])
                if k in clause_lines:
                    raise GraphFormatError(f"line {lineno}: duplicate clause {k}")
                clause_lines[k] = (u, v, w)
                continue
            if fields[0] == "var" and len(fields) >= 3:
                x = int(fields[1])
                if x in var_lines:
                    raise GraphFormatError(f"line {lineno}: duplicate variable {x}")
                var_lines[x] = tuple(int(t) for t in fields[2:])
                continue
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field") from None
        raise GraphFormatError(f"line {lineno}: unrecognised map line {line!r}")
    num_vars = len(var_lines)
    if sorted(var_lines) != list(range(1, num_vars + 1)):
        raise GraphFormatError("variable lines must cover 1..n exactly once")
    n_clauses = len(clause_lines)
    if sorted(clause_lines) != list(range(1, n_clauses + 1)):
        raise GraphFormatError("clause lines must cover 1..k exactly once")
    path_len = 2 * n_clauses + 2
    position: dict[int, tuple[int, int]] = {}
    for x in range(1, num_vars + 1):
        ids = var_lines[x]
        if len(ids) != path_len:
            raise GraphFormatError(f"variable {x} path has {len(ids)} vertices, "
                                   f"expected {path_len}")
        for pos, vid in enumerate(ids):
            position[vid] = (x, pos)
    clauses = []
    for k in range(1, n_clauses + 1):
        roles = []
        for vid in clause_lines[k]:
            if vid not in position or position[vid][1] != 2 * k:
                raise GraphFormatError(
                    f"clause {k} literal id {vid} is not a path vertex at position {2 * k}")
            roles.append(position[vid][0])
        clauses.append((roles[0], roles[1], roles[2]))
    try:
        instance = CnfInstance(num_vars, tuple(clauses))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    _, rm = build_reduction(instance, drop_pendants=drop_pendants)
    if (rm.var_paths != tuple(var_lines[x] for x in range(1, num_vars + 1))
            or rm.clause_literal_ids != tuple(clause_lines[k] for k in range(1, n_clauses + 1))):
        raise GraphFormatError("map file ids are inconsistent with the reconstruction")
    return rm


def serialize_assignment(f: Assignment) -> str:
    return "".join(f"v {x} {int(f[x])}\n" for x in sorted(f))


def parse_assignment(text: str) -> Assignment:
    f: Assignment = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "v" or len(fields) != 3 or fields[2] not in ("0", "1"):
            raise GraphFormatError(f"line {lineno}: expected 'v <var> <0|1>'")
        try:
            x = int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer variable") from None
        if x in f:
            raise GraphFormatError(f"line {lineno}: duplicate variable {x}")
        f[x] = fields[2] == "1"
    return f
