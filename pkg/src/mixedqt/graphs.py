"""Simple graphs, mixed graphs, and the directed-square operation.

Vertices are dense integer ids 0..n-1.  Edges are unordered pairs stored as
sorted tuples; arcs are ordered (tail, head) pairs.  All types are immutable
and every operation is a pure function, so values can be shared freely
between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]
Arc = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalise an unordered vertex pair."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = frozenset(edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        for u, v in norm:
            if not (0 <= u and v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge(u, v) in self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class MixedGraph:
    """A mixed graph: disjoint sets of undirected edges and directed arcs.

    Invariants: no loops, no pair carrying both an edge and an arc, and no
    digons (arcs in both directions between the same pair).
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = frozenset(edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for u, v in norm:
            if not (0 <= u and v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        for t, h in self.arcs:
            if t == h:
                raise ValueError(f"loop arc at vertex {t}")
            if not (0 <= min(t, h) and max(t, h) < self.n):
                raise ValueError(f"arc ({t},{h}) out of range for n={self.n}")
            if (h, t) in self.arcs:
                raise ValueError(f"digon between {t} and {h}")
            if edge(t, h) in norm:
                raise ValueError(f"pair {{{t},{h}}} carries both an edge and an arc")

    @cached_property
    def out_adj(self) -> tuple[frozenset[int], ...]:
        outs: list[set[int]] = [set() for _ in range(self.n)]
        for t, h in self.arcs:
            outs[t].add(h)
        return tuple(frozenset(s) for s in outs)

    @cached_property
    def in_adj(self) -> tuple[frozenset[int], ...]:
        ins: list[set[int]] = [set() for _ in range(self.n)]
        for t, h in self.arcs:
            ins[h].add(t)
        return tuple(frozenset(s) for s in ins)

    def adjacent(self, u: int, v: int) -> bool:
        """True when u and v are joined by an edge or an arc in either direction."""
        if u == v:
            return False
        return edge(u, v) in self.edges or (u, v) in self.arcs or (v, u) in self.arcs

    def __repr__(self) -> str:
        return f"MixedGraph(n={self.n}, edges={len(self.edges)}, arcs={len(self.arcs)})"


# ---------------------------------------------------------------------------
# Small named graphs

def path_graph(k: int) -> Graph:
    return Graph(k, frozenset((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(k, frozenset((i, (i + 1) % k) for i in range(k)))


def complete_graph(k: int) -> Graph:
    return Graph(k, frozenset(combinations(range(k), 2)))


def net_graph() -> Graph:
    """Triangle 0,1,2 with pendant edges 0-3, 1-4, 2-5."""
    return Graph(6, frozenset({(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)}))


def prism_graph() -> Graph:
    """The triangular prism: two triangles joined by a perfect matching."""
    return Graph(6, frozenset({(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                               (0, 3), (1, 4), (2, 5)}))


# ---------------------------------------------------------------------------
# Squares

def underlying(m: MixedGraph) -> Graph:
    """Forget all directions: every arc becomes an edge."""
    return Graph(m.n, m.edges | frozenset(edge(t, h) for t, h in m.arcs))


def mixed_square(m: MixedGraph) -> MixedGraph:
    """Add an edge between each non-adjacent pair at directed distance two.

    Arcs are unchanged; pairs already joined by an edge or an arc in either
    direction gain nothing.
    """
    new_edges = set(m.edges)
    out = m.out_adj
    for w in range(m.n):
        for u in m.in_adj[w]:
            for v in out[w]:
                if u != v and not m.adjacent(u, v):
                    new_edges.add(edge(u, v))
    return MixedGraph(m.n, frozenset(new_edges), m.arcs)


def square_dipath_witnesses(m: MixedGraph) -> dict[Edge, tuple[int, int, int]]:
    """Map each edge added by ``mixed_square`` to a 2-dipath (u, w, v) creating it.

    The recorded triple satisfies (u, w) and (w, v) in m.arcs; when several
    middle vertices qualify the smallest is kept.
    """
    witnesses: dict[Edge, tuple[int, int, int]] = {}
    out = m.out_adj
    for w in range(m.n):
        for u in sorted(m.in_adj[w]):
            for v in sorted(out[w]):
                if u != v and not m.adjacent(u, v):
                    e = edge(u, v)
                    if e not in witnesses or witnesses[e][1] > w:
                        witnesses[e] = (u, w, v)
    return witnesses


def undirected_square(m: MixedGraph) -> Graph:
    """The simple graph underlying the mixed square."""
    return underlying(mixed_square(m))


# ---------------------------------------------------------------------------
# Structural queries

def triangle_free_edges(g: Graph) -> frozenset[Edge]:
    """Edges whose endpoints have no common neighbour (in no triangle)."""
    adj = g.adj
    return frozenset(e for e in g.edges if not (adj[e[0]] & adj[e[1]]))


def edge_subgraph(g: Graph, x: Iterable[Edge]) -> tuple[Graph, tuple[int, ...]]:
    """The graph formed from the edge subset ``x``.

    Vertices are the endpoints of ``x`` re-indexed densely; the second return
    value maps each new index back to the original vertex id.
    """
    xs = frozenset(edge(u, v) for u, v in x)
    if not xs <= g.edges:
        bad = sorted(xs - g.edges)[0]
        raise ValueError(f"pair {bad} is not an edge of the host graph")
    vertices = sorted({v for e in xs for v in e})
    index = {v: i for i, v in enumerate(vertices)}
    sub = Graph(len(vertices), frozenset(edge(index[u], index[v]) for u, v in xs))
    return sub, tuple(vertices)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, sorted by smallest member."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = {root}
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """An odd cycle as a vertex sequence, or None when the graph is bipartite."""
    colour: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in range(g.n):
        if root in colour:
            continue
        colour[root] = 0
        parent[root] = None
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in sorted(g.adj[v]):
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    parent[w] = v
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return _tree_cycle(parent, v, w)
    return None


def _tree_cycle(parent: dict[int, int | None], x: int, y: int) -> tuple[int, ...]:
    """Close the tree paths of x and y into a cycle through their meeting point."""
    px = [x]
    while parent[px[-1]] is not None:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] is not None:
        py.append(parent[py[-1]])
    ay = set(py)
    meet = next(v for v in px if v in ay)
    cx = px[: px.index(meet) + 1]
    cy = py[: py.index(meet)]
    return tuple(cx + cy[::-1])


def has_odd_cycle(g: Graph) -> bool:
    """True iff the graph is not bipartite."""
    return find_odd_cycle(g) is not None


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring (V1, V2), or None when an odd cycle exists.

    Deterministic: the smallest vertex of each component lands in V1.
    """
    colour: dict[int, int] = {}
    for root in range(g.n):
        if root in colour:
            continue
        colour[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in sorted(g.adj[v]):
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    v1 = frozenset(v for v, c in colour.items() if c == 0)
    return v1, frozenset(range(g.n)) - v1


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests.

    Runs one BFS per vertex; every non-tree edge closes a walk of length
    dist(x)+dist(y)+1 which contains a cycle no longer than that, and a BFS
    rooted on a shortest cycle attains its exact length.
    """
    best: int | float = math.inf
    edges = sorted(g.edges)
    for root in range(g.n):
        dist = {root: 0}
        parent: dict[int, int | None] = {root: None}
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
        for x, y in edges:
            if x in dist and y in dist and parent[x] != y and parent[y] != x:
                cand = dist[x] + dist[y] + 1
                if cand < best:
                    best = cand
    return best


def _articulation_points(vertices: Iterable[int], adj: dict[int, set[int]]) -> set[int]:
    """Articulation points of the graph given by an adjacency mapping."""
    order = sorted(vertices)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    points: set[int] = set()
    timer = 0
    for root in order:
        if root in disc:
            continue
        parent[root] = None
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, iter(sorted(adj[root])))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u != root and low[v] >= disc[u]:
                        points.add(u)
        if root_children >= 2:
            points.add(root)
    return points


def cut_vertices(g: Graph) -> frozenset[int]:
    """All articulation points of the graph."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    return frozenset(_articulation_points(range(g.n), adj))


def _components_of(vertices: set[int], adj: dict[int, set[int]]) -> list[frozenset[int]]:
    """Connected components of the subgraph induced on ``vertices``."""
    left = set(vertices)
    comps = []
    while left:
        root = min(left)
        comp = {root}
        stack = [root]
        left.discard(root)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


VertexCut = tuple[frozenset[int], frozenset[int], frozenset[int]]


def independent_vertex_cuts(g: Graph, max_size: int = 3) -> list[VertexCut]:
    """All triples (I, V1, V2) where the independent set I separates V1 from V2.

    The triple partitions the vertex set; every vertex of I has a neighbour
    on both sides, no V1-V2 edge exists, and each side is a nonempty union of
    components of g-I.  Bipartitions are produced once, with the component
    containing the smallest remaining vertex always on the V1 side.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    cuts: list[VertexCut] = []
    for size in range(1, max_size + 1):
        for cand in combinations(range(g.n), size):
            if any(b in adj[a] for a, b in combinations(cand, 2)):
                continue
            rest = set(range(g.n)) - set(cand)
            comps = _components_of(rest, adj)
            if len(comps) < 2:
                continue
            sets = set(cand)
            touch = [frozenset(i for i, c in enumerate(comps) if adj[v] & c)
                     for v in cand]
            for mask in range(2 ** (len(comps) - 1)):
                side2_idx = {i + 1 for i in range(len(comps) - 1) if mask >> i & 1}
                if not side2_idx:
                    continue
                side1_idx = set(range(len(comps))) - side2_idx
                if not all(t & side1_idx and t & side2_idx for t in touch):
                    continue
                v1 = frozenset().union(*(comps[i] for i in sorted(side1_idx)))
                v2 = frozenset().union(*(comps[i] for i in sorted(side2_idx)))
                cuts.append((frozenset(sets), v1, v2))
    return cuts


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Remove vertices, re-indexing survivors densely.

    Returns the reduced graph together with the original id of every new
    vertex in index order.
    """
    doomed = set(vs)
    if not doomed <= set(range(g.n)):
        raise ValueError("vertex to delete out of range")
    kept = tuple(v for v in range(g.n) if v not in doomed)
    index = {v: i for i, v in enumerate(kept)}
    edges = frozenset(edge(index[u], index[v]) for u, v in g.edges
                      if u not in doomed and v not in doomed)
    return Graph(len(kept), edges), kept
