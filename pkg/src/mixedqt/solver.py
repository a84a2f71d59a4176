"""Deciding whether a graph admits a quasi-transitive partial orientation.

A mixed graph is quasi-transitive when it has no induced 2-dipath (a directed
path u -> w -> v whose ends are non-adjacent) and every edge's endpoints are
joined by some 2-dipath.  A graph admits such a partial orientation exactly
when it arises as the undirected square of an oriented graph, which is what
:func:`decide_qt` decides.

The exact solver assigns each edge one of three states (kept as an edge,
oriented forward, oriented backward) and searches with constraint
propagation.  Edges lying in no triangle must become arcs and their endpoints
must be sources or sinks, which drives an alternating propagation along
triangle-free paths.  Independent vertex cuts of size at most three split the
search into independent sides that only communicate through the source/sink
pattern on the cut, and those side problems are memoised.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Union

from .graphs import (
    Edge,
    Graph,
    MixedGraph,
    _articulation_points,
    _components_of,
    connected_components,
    edge,
    underlying,
)


class VertexStatus(Enum):
    SOURCE = "source"
    SINK = "sink"
    ARC_FREE = "arc-free"
    INTERNAL = "internal"


@dataclass(frozen=True)
class InducedTwoDipath:
    """Arcs u -> w -> v with u and v non-adjacent."""

    u: int
    w: int
    v: int

    def describe(self) -> str:
        return f"violation induced-2-dipath {self.u} {self.w} {self.v}"


@dataclass(frozen=True)
class UncoveredEdge:
    """An edge whose endpoints are joined by no 2-dipath."""

    u: int
    v: int

    def describe(self) -> str:
        return f"violation uncovered-edge {self.u} {self.v}"


QtViolation = Union[InducedTwoDipath, UncoveredEdge]


def is_qt(m: MixedGraph) -> QtViolation | None:
    """None when the mixed graph is quasi-transitive, else the first violation."""
    out, inn = m.out_adj, m.in_adj
    for w in range(m.n):
        for u in sorted(inn[w]):
            for v in sorted(out[w]):
                if u != v and not m.adjacent(u, v):
                    return InducedTwoDipath(u, w, v)
    for u, v in sorted(m.edges):
        if not ((out[u] & inn[v]) or (out[v] & inn[u])):
            return UncoveredEdge(u, v)
    return None


def vertex_status(m: MixedGraph, v: int) -> VertexStatus:
    if not 0 <= v < m.n:
        raise ValueError(f"vertex {v} out of range")
    has_out = bool(m.out_adj[v])
    has_in = bool(m.in_adj[v])
    if has_out and has_in:
        return VertexStatus.INTERNAL
    if has_out:
        return VertexStatus.SOURCE
    if has_in:
        return VertexStatus.SINK
    return VertexStatus.ARC_FREE


Signature = tuple[str, str, str]


def signature(m: MixedGraph, triple: tuple[int, int, int]) -> Signature:
    """Source/sink pattern of three designated vertices, '+' meaning source."""
    components = []
    for v in triple:
        st = vertex_status(m, v)
        if st is VertexStatus.SOURCE:
            components.append("+")
        elif st is VertexStatus.SINK:
            components.append("-")
        else:
            raise ValueError(f"vertex {v} is {st.value}, not a source or sink")
    return (components[0], components[1], components[2])


@dataclass(frozen=True)
class PartialOrientation:
    """A mixed graph whose underlying simple graph is the base graph."""

    base: Graph
    mixed: MixedGraph

    def __post_init__(self) -> None:
        if underlying(self.mixed) != self.base:
            raise ValueError("mixed graph is not a partial orientation of the base graph")


class WitnessError(ValueError):
    """A claimed witness or replay trace fails validation."""


@dataclass(frozen=True)
class WitnessCheck:
    """Outcome of verifying a claimed orientation witness against a graph."""

    ok: bool
    problems: tuple[str, ...] = ()
    violation: QtViolation | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(g: Graph, m: MixedGraph) -> WitnessCheck:
    """Check that m is a quasi-transitive partial orientation of g."""
    problems: list[str] = []
    if m.n != g.n:
        problems.append(f"mismatch vertex-count {m.n} {g.n}")
        return WitnessCheck(False, tuple(problems))
    und = underlying(m)
    for u, v in sorted(g.edges - und.edges):
        problems.append(f"mismatch missing-edge {u} {v}")
    for u, v in sorted(und.edges - g.edges):
        problems.append(f"mismatch extra-adjacency {u} {v}")
    if problems:
        return WitnessCheck(False, tuple(problems))
    violation = is_qt(m)
    if violation is not None:
        return WitnessCheck(False, (violation.describe(),), violation)
    return WitnessCheck(True)


# ---------------------------------------------------------------------------
# Exhaustive enumeration

ENUMERATION_EDGE_CAP = 16


def enumerate_qt(g: Graph) -> Iterator[PartialOrientation]:
    """Yield every quasi-transitive partial orientation of g.

    Each edge independently takes one of the states kept / forward / backward,
    and exactly the assignments satisfying :func:`is_qt` are produced, in
    lexicographic order of the state vector over the sorted edge list (kept <
    forward < backward).  The 3^m state space limits this to small graphs.
    """
    elist = sorted(g.edges)
    m = len(elist)
    if m > ENUMERATION_EDGE_CAP:
        raise ValueError(f"enumeration supports at most {ENUMERATION_EDGE_CAP} edges, got {m}")
    n = g.n
    adjm = [0] * n
    for u, v in elist:
        adjm[u] |= 1 << v
        adjm[v] |= 1 << u
    eidx = {e: i for i, e in enumerate(elist)}

    # Wedge table: for edge (u, v) and common neighbour w, the two edges
    # {u,w}, {w,v} with the state orienting u->w resp. w->v.  State codes are
    # 0 kept, 1 forward (low->high), 2 backward.
    def arc_code(a: int, b: int) -> int:
        return 1 if a < b else 2

    wedges: list[tuple[tuple[int, int, int, int, int], ...]] = []
    for u, v in elist:
        ws = []
        for w in sorted(g.adj[u] & g.adj[v]):
            j1 = eidx[edge(u, w)]
            j2 = eidx[edge(w, v)]
            ws.append((w, j1, arc_code(u, w), j2, arc_code(w, v)))
        wedges.append(tuple(ws))

    choice = [0] * m
    out = [0] * n
    inn = [0] * n
    kept_at: list[list[int]] = [[] for _ in range(n)]

    def supported(i: int, depth: int) -> bool:
        # A kept edge needs one wedge whose two edges can still be oriented
        # into a covering 2-dipath; edges beyond `depth` are undecided.
        for _w, j1, c1, j2, c2 in wedges[i]:
            if (j1 > depth or choice[j1] == c1) and (j2 > depth or choice[j2] == c2):
                return True
            if (j2 > depth or choice[j2] == 3 - c2) and (j1 > depth or choice[j1] == 3 - c1):
                return True
        return False

    def kept_ok(u: int, v: int, depth: int) -> bool:
        for i in kept_at[u]:
            if not supported(i, depth):
                return False
        for i in kept_at[v]:
            if not supported(i, depth):
                return False
        return True

    def build() -> PartialOrientation:
        edges = frozenset(elist[i] for i in range(m) if choice[i] == 0)
        arcs = frozenset(
            elist[i] if choice[i] == 1 else (elist[i][1], elist[i][0])
            for i in range(m) if choice[i] != 0
        )
        return PartialOrientation(g, MixedGraph(n, edges, arcs))

    def search(d: int) -> Iterator[PartialOrientation]:
        if d == m:
            yield build()
            return
        u, v = elist[d]
        bu, bv = 1 << u, 1 << v
        # kept
        if wedges[d]:
            choice[d] = 0
            if supported(d, d) and kept_ok(u, v, d):
                kept_at[u].append(d)
                kept_at[v].append(d)
                yield from search(d + 1)
                kept_at[u].pop()
                kept_at[v].pop()
        # forward arc u -> v
        choice[d] = 1
        if not (inn[u] & ~(adjm[v] | bv)) and not (out[v] & ~(adjm[u] | bu)):
            if kept_ok(u, v, d):
                out[u] |= bv
                inn[v] |= bu
                yield from search(d + 1)
                out[u] &= ~bv
                inn[v] &= ~bu
        # backward arc v -> u
        choice[d] = 2
        if not (inn[v] & ~(adjm[u] | bu)) and not (out[u] & ~(adjm[v] | bv)):
            if kept_ok(u, v, d):
                out[v] |= bu
                inn[u] |= bv
                yield from search(d + 1)
                out[v] &= ~bu
                inn[u] &= ~bv

    return search(0)


# ---------------------------------------------------------------------------
# Exact decision procedure

class BudgetExceeded(RuntimeError):
    """The solver hit its configured node limit before reaching an answer."""

    def __init__(self, nodes: int):
        super().__init__(f"search node limit exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SolveOptions:
    """Tuning knobs for :func:`decide_qt`.

    ``node_limit`` bounds the number of search nodes before raising
    :class:`BudgetExceeded`.  ``decompose`` enables independent-cut
    decomposition; components with at most ``flat_cutoff`` edges are searched
    directly, and cuts of size 2..``max_cut_size`` are only sought in
    components of at most ``cut_search_limit`` vertices.  ``threads`` solves
    connected components concurrently (results are identical to sequential
    execution).
    """

    node_limit: int | None = None
    decompose: bool = True
    max_cut_size: int = 3
    flat_cutoff: int = 10
    cut_search_limit: int = 256
    threads: int = 1


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None):
        self.nodes = 0
        self.limit = limit

    def spend(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(self.nodes)


_KEPT, _FWD, _REV = 1, 2, 4
_SINGLETONS = {_KEPT, _FWD, _REV}


class _FlatState:
    """Shared immutable context for one flat search."""

    __slots__ = ("elist", "eidx", "adj", "inc", "wedges", "two_sided")

    def __init__(self, vertices: frozenset[int], edges: frozenset[Edge],
                 adj: dict[int, set[int]], forced: dict[int, int]):
        self.elist = sorted(edges)
        self.eidx = {e: i for i, e in enumerate(self.elist)}
        self.adj = adj
        inc: dict[int, list[int]] = {v: [] for v in vertices}
        for i, (u, v) in enumerate(self.elist):
            inc[u].append(i)
            inc[v].append(i)
        self.inc = inc
        wedges = []
        two_sided = set(forced)
        for u, v in self.elist:
            ws = []
            for w in sorted(adj[u] & adj[v]):
                j1 = self.eidx[edge(u, w)]
                j2 = self.eidx[edge(w, v)]
                b1 = _FWD if u < w else _REV      # orients u -> w
                b2 = _FWD if w < v else _REV      # orients w -> v
                ws.append((j1, b1, j2, b2))
            wedges.append(tuple(ws))
            if not ws:
                two_sided.add(u)
                two_sided.add(v)
        self.wedges = wedges
        self.two_sided = two_sided

    def arc_bit(self, i: int, tail: int) -> int:
        """Domain bit orienting edge i away from ``tail``."""
        return _FWD if tail == self.elist[i][0] else _REV


def _supported(st: _FlatState, dom: list[int], i: int) -> bool:
    for j1, b1, j2, b2 in st.wedges[i]:
        if dom[j1] & b1 and dom[j2] & b2:
            return True
        if dom[j2] & (b2 ^ 6) and dom[j1] & (b1 ^ 6):
            return True
    return False


def _propagate(st: _FlatState, dom: list[int], pol: dict[int, int],
               applied: set[int], work: list[int]) -> bool:
    """Run pruning rules to a fixpoint; False on contradiction.

    ``work`` holds edge indices to (re)examine; vertex polarity assignments
    are handled inline.  Domains only shrink, so the fixpoint is unique.
    """
    vwork: list[int] = []

    def clear(j: int, bits: int) -> bool:
        nd = dom[j] & ~bits
        if nd == dom[j]:
            return True
        dom[j] = nd
        if nd == 0:
            return False
        work.append(j)
        for x in st.elist[j]:
            for k in st.inc[x]:
                if dom[k] & _KEPT:
                    work.append(k)
        return True

    def set_pol(v: int, p: int) -> bool:
        cur = pol.get(v)
        if cur is not None:
            return cur == p
        pol[v] = p
        vwork.append(v)
        return True

    for v in list(pol):
        vwork.append(v)

    while work or vwork:
        while vwork:
            v = vwork.pop()
            p = pol[v]
            for j in st.inc[v]:
                # a source admits no incoming arc, a sink no outgoing one
                other = st.elist[j][1] if st.elist[j][0] == v else st.elist[j][0]
                forbidden = st.arc_bit(j, other) if p == 1 else st.arc_bit(j, v)
                if not clear(j, forbidden):
                    return False
        if not work:
            break
        i = work.pop()
        d = dom[i]
        if d == 0:
            return False
        if d & _KEPT and not _supported(st, dom, i):
            if not clear(i, _KEPT):
                return False
            d = dom[i]
        if d in _SINGLETONS and i not in applied:
            applied.add(i)
            if d != _KEPT:
                u, v = st.elist[i]
                a, b = (u, v) if d == _FWD else (v, u)
                if b in st.two_sided and not set_pol(b, -1):
                    return False
                if a in st.two_sided and not set_pol(a, 1):
                    return False
                # arc a -> b: forbid extensions into induced 2-dipaths
                for j in st.inc[b]:
                    if j == i:
                        continue
                    y = st.elist[j][1] if st.elist[j][0] == b else st.elist[j][0]
                    if y != a and y not in st.adj[a]:
                        if not clear(j, st.arc_bit(j, b)):
                            return False
                for j in st.inc[a]:
                    if j == i:
                        continue
                    x = st.elist[j][1] if st.elist[j][0] == a else st.elist[j][0]
                    if x != b and x not in st.adj[b]:
                        if not clear(j, st.arc_bit(j, x)):
                            return False
    return True


def _sub_is_qt(st: _FlatState, dom: list[int]) -> bool:
    """Full quasi-transitivity check of a fully decided assignment."""
    out: dict[int, set[int]] = {v: set() for v in st.inc}
    inn: dict[int, set[int]] = {v: set() for v in st.inc}
    for i, (u, v) in enumerate(st.elist):
        if dom[i] == _FWD:
            out[u].add(v)
            inn[v].add(u)
        elif dom[i] == _REV:
            out[v].add(u)
            inn[u].add(v)
    for w in st.inc:
        for u in inn[w]:
            for v in out[w]:
                if u != v and v not in st.adj[u]:
                    return False
    for i, (u, v) in enumerate(st.elist):
        if dom[i] == _KEPT and not ((out[u] & inn[v]) or (out[v] & inn[u])):
            return False
    return True


def _flat_solve(vertices: frozenset[int], edges: frozenset[Edge],
                adj: dict[int, set[int]], forced: dict[int, int],
                budget: _Budget) -> tuple[frozenset[Edge], frozenset[tuple[int, int]]] | None:
    """Backtracking search over edge states with propagation."""
    st = _FlatState(vertices, edges, adj, forced)
    m = len(st.elist)
    dom = [(_FWD | _REV) if not st.wedges[i] else (_KEPT | _FWD | _REV) for i in range(m)]

    def extract(dom_: list[int]):
        kept = frozenset(st.elist[i] for i in range(m) if dom_[i] == _KEPT)
        arcs = frozenset(
            st.elist[i] if dom_[i] == _FWD else (st.elist[i][1], st.elist[i][0])
            for i in range(m) if dom_[i] in (_FWD, _REV)
        )
        return kept, arcs

    def search(dom_: list[int], pol: dict[int, int], applied: set[int]):
        budget.spend()
        undecided = [i for i in range(m) if dom_[i] not in _SINGLETONS]
        if not undecided:
            return extract(dom_) if _sub_is_qt(st, dom_) else None
        i = min(undecided, key=lambda j: (bin(dom_[j]).count("1"), j))
        for value in (_FWD, _REV, _KEPT):
            if not dom_[i] & value:
                continue
            d2 = list(dom_)
            p2 = dict(pol)
            a2 = set(applied)
            d2[i] = value
            if _propagate(st, d2, p2, a2, [i]):
                result = search(d2, p2, a2)
                if result is not None:
                    return result
        return None

    pol = dict(forced)
    applied: set[int] = set()
    if not _propagate(st, dom, pol, applied, list(range(m))):
        return None
    return search(dom, pol, applied)


class _ComponentSolver:
    """Cut decomposition within one connected component.

    Every vertex incident to a triangle-free edge must be a source or a
    sink, and polarities alternate along triangle-free edges; so each
    connected piece of the triangle-free edge subgraph is a polarity class
    whose members are all decided by one bit.  Cut constraints are recorded
    on class bits where possible, which keeps memo keys small when the same
    class meets many cuts, and classes with an odd cycle settle the whole
    component negatively up front.
    """

    def __init__(self, adj0: list[set[int]], edges0: frozenset[Edge],
                 opts: SolveOptions, budget: _Budget):
        self.adj0 = adj0
        self.edges0 = edges0
        self.opts = opts
        self.budget = budget
        self.memo: dict = {}
        self.class_id: dict[int, int] = {}
        self.parity: dict[int, int] = {}

    def solve_root(self, comp: frozenset[int]):
        adj = {v: self.adj0[v] & comp for v in comp}
        tf_adj: dict[int, set[int]] = {v: set() for v in comp}
        for v in sorted(comp):
            for w in adj[v]:
                if v < w and not adj[v] & adj[w]:
                    tf_adj[v].add(w)
                    tf_adj[w].add(v)
        cid = 0
        for root in sorted(comp):
            if root in self.class_id or not tf_adj[root]:
                continue
            self.class_id[root] = cid
            self.parity[root] = 0
            queue = [root]
            head = 0
            while head < len(queue):
                v = queue[head]
                head += 1
                for w in sorted(tf_adj[v]):
                    if w not in self.class_id:
                        self.class_id[w] = cid
                        self.parity[w] = self.parity[v] ^ 1
                        queue.append(w)
                    elif self.parity[w] == self.parity[v]:
                        return None  # odd cycle of forced arcs: no orientation
            cid += 1
        return self._solve(comp, {}, {})

    def _solve(self, vertices: frozenset[int], fclasses: dict[int, int],
               fverts: dict[int, int]):
        adj = {v: self.adj0[v] & vertices for v in vertices}
        comps = _components_of(set(vertices), adj)
        if len(comps) == 1:
            return self._component(comps[0], fclasses, fverts)
        acc_e: set[Edge] = set()
        acc_a: set[tuple[int, int]] = set()
        for comp in comps:
            sub = self._component(comp, fclasses, fverts)
            if sub is None:
                return None
            acc_e |= sub[0]
            acc_a |= sub[1]
        return frozenset(acc_e), frozenset(acc_a)

    def _forced_in(self, region: frozenset[int], fclasses: dict[int, int],
                   fverts: dict[int, int]) -> dict[int, int]:
        forced: dict[int, int] = {}
        for v in region:
            c = self.class_id.get(v)
            if c is not None and c in fclasses:
                forced[v] = 1 if self.parity[v] == fclasses[c] else -1
            elif v in fverts:
                forced[v] = fverts[v]
        return forced

    def _component(self, region: frozenset[int], fclasses: dict[int, int],
                   fverts: dict[int, int]):
        rclasses = {self.class_id[v] for v in region if v in self.class_id}
        key = (region,
               tuple(sorted((c, b) for c, b in fclasses.items() if c in rclasses)),
               tuple(sorted((v, p) for v, p in fverts.items() if v in region)))
        if key in self.memo:
            return self.memo[key]
        self.budget.spend()
        adj = {v: self.adj0[v] & region for v in region}
        edges = frozenset(e for e in self.edges0 if e[0] in region and e[1] in region)
        result = None
        decomposed = False
        if self.opts.decompose and len(edges) > self.opts.flat_cutoff:
            cut = self._find_cut(region, adj)
            if cut is not None:
                decomposed = True
                cut_vs, v1, v2 = cut
                free_classes: list[int] = []
                free_verts: list[int] = []
                for v in sorted(cut_vs):
                    c = self.class_id.get(v)
                    if c is None:
                        if v not in fverts and v not in free_verts:
                            free_verts.append(v)
                    elif c not in fclasses and c not in free_classes:
                        free_classes.append(c)
                nfree = len(free_classes) + len(free_verts)
                for combo in product((0, 1), repeat=nfree):
                    fc2 = dict(fclasses)
                    fv2 = dict(fverts)
                    for c, b in zip(free_classes, combo):
                        fc2[c] = b
                    for v, b in zip(free_verts, combo[len(free_classes):]):
                        fv2[v] = 1 if b == 0 else -1
                    r1 = self._solve(v1 | cut_vs, fc2, fv2)
                    if r1 is None:
                        continue
                    r2 = self._solve(v2 | cut_vs, fc2, fv2)
                    if r2 is None:
                        continue
                    result = (r1[0] | r2[0], r1[1] | r2[1])
                    break
        if not decomposed:
            forced = self._forced_in(region, fclasses, fverts)
            result = _flat_solve(region, edges, adj, forced, self.budget)
        self.memo[key] = result
        return result

    def _find_cut(self, vertices: frozenset[int], adj: dict[int, set[int]]):
        points = _articulation_points(vertices, adj)
        if points:
            v = min(points)
            comps = _components_of(set(vertices) - {v}, adj)
            v2 = frozenset().union(*comps[1:])
            return frozenset({v}), comps[0], v2
        if self.opts.max_cut_size < 2 or len(vertices) > self.opts.cut_search_limit:
            return None
        best = None
        for seed in sorted(vertices):
            cut = _grow_cut(seed, vertices, adj, self.opts.max_cut_size)
            if cut is not None and (best is None or len(cut[0]) < len(best[0])):
                best = cut
                if len(best[0]) == 2:
                    break
        return best


def _grow_cut(seed: int, vertices: frozenset[int], adj: dict[int, set[int]],
              max_size: int):
    """Grow a region from ``seed`` until its neighbourhood is an independent
    set of at most ``max_size`` vertices separating it from the rest.

    A greedy heuristic: boundary vertices with no neighbour outside are
    absorbed, otherwise the vertex whose absorption keeps the boundary
    smallest is taken.  Finding a cut is a performance device only, so
    incompleteness here costs time, never correctness.
    """
    region = {seed}
    boundary = set(adj[seed])
    while True:
        if not boundary:
            return None
        rest = vertices - region - boundary
        if not rest:
            return None
        absorbed = False
        for b in sorted(boundary):
            if not adj[b] & rest:
                region.add(b)
                boundary.discard(b)
                boundary |= adj[b] - region
                absorbed = True
        if absorbed:
            continue
        if len(boundary) <= max_size and not any(
                adj[a] & boundary for a in boundary):
            return frozenset(boundary), frozenset(region), frozenset(rest)
        pick = None
        pick_size = None
        for b in sorted(boundary):
            grown = (boundary - {b}) | (adj[b] - region - boundary)
            if pick_size is None or len(grown) < pick_size:
                pick, pick_size = b, len(grown)
        region.add(pick)
        boundary.discard(pick)
        boundary |= adj[pick] - region


def decide_qt(g: Graph, opts: SolveOptions | None = None) -> PartialOrientation | None:
    """A quasi-transitive partial orientation of g, or None when none exists.

    Deterministic: identical inputs and options produce identical witnesses.
    Raises :class:`BudgetExceeded` when a node limit is configured and hit,
    which is distinct from a NO answer.
    """
    opts = opts or SolveOptions()
    if opts.threads < 1:
        raise ValueError("threads must be at least 1")
    adj0 = [set(a) for a in g.adj]
    budget = _Budget(opts.node_limit)
    comps = connected_components(g)

    def solve_component(comp: frozenset[int]):
        return _ComponentSolver(adj0, g.edges, opts, budget).solve_root(comp)

    if opts.threads > 1 and len(comps) > 1 and opts.node_limit is None:
        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            results = list(pool.map(solve_component, comps))
    else:
        results = [solve_component(c) for c in comps]
    if any(r is None for r in results):
        return None
    edges = frozenset().union(*(r[0] for r in results)) if results else frozenset()
    arcs = frozenset().union(*(r[1] for r in results)) if results else frozenset()
    return PartialOrientation(g, MixedGraph(g.n, edges, arcs))
