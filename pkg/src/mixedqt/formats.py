"""Line-oriented text formats and DOT export for graphs and mixed graphs.

Graph files::

    c optional comment
    p graph <n> <m>
    e <u> <v>

Mixed-graph files use ``p mixed <n> <m_edges> <m_arcs>`` with ``e`` lines for
edges and ``a <tail> <head>`` lines for arcs.  Vertices are 0-indexed.
Serialisation is canonical (sorted body lines), so parse o serialize is the
identity on canonical files.
"""

from __future__ import annotations

from .graphs import Graph, MixedGraph, edge


class GraphFormatError(ValueError):
    """Raised when a graph, witness, or map file cannot be parsed."""


def _significant_lines(text: str) -> list[list[str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        out.append([str(lineno)] + line.split())
    return out


def _parse_header(fields: list[str], kind: str) -> list[int]:
    lineno = fields[0]
    if len(fields) < 3 or fields[1] != "p" or fields[2] != kind:
        raise GraphFormatError(f"line {lineno}: expected 'p {kind}' header")
    try:
        return [int(x) for x in fields[3:]]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer header field") from None


def parse_graph(text: str) -> Graph:
    lines = _significant_lines(text)
    if not lines:
        raise GraphFormatError("empty graph file")
    counts = _parse_header(lines[0], "graph")
    if len(counts) != 2:
        raise GraphFormatError("graph header needs exactly <n> <m>")
    n, m = counts
    edges: set[tuple[int, int]] = set()
    for fields in lines[1:]:
        lineno = fields[0]
        if fields[1] != "e" or len(fields) != 4:
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
        try:
            u, v = int(fields[2]), int(fields[3])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
        try:
            e = edge(u, v)
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        if e in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add(e)
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, body has {len(edges)}")
    try:
        return Graph(n, frozenset(edges))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_mixed(text: str) -> MixedGraph:
    lines = _significant_lines(text)
    if not lines:
        raise GraphFormatError("empty mixed-graph file")
    counts = _parse_header(lines[0], "mixed")
    if len(counts) != 3:
        raise GraphFormatError("mixed header needs exactly <n> <m_edges> <m_arcs>")
    n, me, ma = counts
    edges: set[tuple[int, int]] = set()
    arcs: set[tuple[int, int]] = set()
    for fields in lines[1:]:
        lineno = fields[0]
        if len(fields) != 4 or fields[1] not in ("e", "a"):
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>' or 'a <tail> <head>'")
        try:
            u, v = int(fields[2]), int(fields[3])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
        if fields[1] == "e":
            try:
                e = edge(u, v)
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: {exc}") from None
            if e in edges:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
            edges.add(e)
        else:
            if (u, v) in arcs:
                raise GraphFormatError(f"line {lineno}: duplicate arc {u} {v}")
            arcs.add((u, v))
    if len(edges) != me or len(arcs) != ma:
        raise GraphFormatError(
            f"header declares {me} edges / {ma} arcs, body has {len(edges)} / {len(arcs)}")
    try:
        return MixedGraph(n, frozenset(edges), frozenset(arcs))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    lines = [f"p graph {g.n} {len(g.edges)}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def serialize_mixed(m: MixedGraph) -> str:
    lines = [f"p mixed {m.n} {len(m.edges)} {len(m.arcs)}"]
    lines += [f"e {u} {v}" for u, v in sorted(m.edges)]
    lines += [f"a {t} {h}" for t, h in sorted(m.arcs)]
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in sorted(g.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def mixed_to_dot(m: MixedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(m.n)]
    lines += [f"  {u} -> {v} [dir=none];" for u, v in sorted(m.edges)]
    lines += [f"  {t} -> {h};" for t, h in sorted(m.arcs)]
    lines.append("}")
    return "\n".join(lines) + "\n"
