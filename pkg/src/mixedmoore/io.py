"""Reading and writing mixed graphs.

The ``mg1`` text format::

    mg1 <n> <#edges> <#arcs>
    L <m> <b> | P <x> <y> | N <id>     (one line per vertex, in order)
    E <i> <j>                          (one line per edge, i < j)
    A <i> <j>                          (one line per arc, tail i, head j)

Field elements appear as their integer encodings; indices are 0-based
positions in the vertex list.
"""
from __future__ import annotations

from .errors import MalformedFile
from .graph import Line, MixedGraph, Point


def _vertex_line(v) -> str:
    if isinstance(v, Line):
        return f"L {v.m} {v.b}"
    if isinstance(v, Point):
        return f"P {v.x} {v.y}"
    return f"N {int(v)}"


def dumps(G: MixedGraph) -> str:
    lines = [f"mg1 {G.order} {len(G.edges)} {len(G.arcs)}"]
    lines += [_vertex_line(v) for v in G.vertices]
    lines += [f"E {i} {j}" for i, j in sorted(G.edges)]
    lines += [f"A {i} {j}" for i, j in sorted(G.arcs)]
    return "\n".join(lines) + "\n"


def loads(text: str) -> MixedGraph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 4 or lines[0][0] != "mg1":
        raise MalformedFile("missing 'mg1 <n> <#edges> <#arcs>' header")
    try:
        n, ne, na = (int(x) for x in lines[0][1:])
    except ValueError:
        raise MalformedFile(f"bad header: {' '.join(lines[0])}") from None
    body = lines[1:]
    if len(body) != n + ne + na:
        raise MalformedFile(f"expected {n + ne + na} body lines, found {len(body)}")

    def fields(k, tag, count):
        row = body[k]
        if row[0] not in tag or len(row) != count + 1:
            raise MalformedFile(f"line {k + 2}: unexpected {' '.join(row)!r}")
        try:
            return row[0], [int(x) for x in row[1:]]
        except ValueError:
            raise MalformedFile(f"line {k + 2}: non-integer field") from None

    vertices = []
    for k in range(n):
        tag = body[k][0]
        if tag == "N":
            vertices.append(fields(k, "N", 1)[1][0])
        else:
            tag, (a, b) = fields(k, "LP", 2)
            vertices.append(Line(a, b) if tag == "L" else Point(a, b))
    edges = [tuple(fields(k, "E", 2)[1]) for k in range(n, n + ne)]
    arcs = [tuple(fields(k, "A", 2)[1]) for k in range(n + ne, n + ne + na)]
    if any(i >= j for i, j in edges):
        raise MalformedFile("edge lines must have i < j")
    try:
        G = MixedGraph(vertices, edges, arcs)
    except ValueError as exc:
        raise MalformedFile(str(exc)) from None
    if len(G.edges) != ne or len(G.arcs) != na:
        raise MalformedFile("duplicate edge or arc lines")
    return G


def write_mg1(G: MixedGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(G))


def read_mg1(path) -> MixedGraph:
    with open(path) as fh:
        return loads(fh.read())


def to_dot(G: MixedGraph, name: str = "G") -> str:
    """Graphviz source; edges are drawn without arrowheads."""
    def label(v):
        return str(v).replace('"', "'")

    out = [f"digraph {name} {{"]
    out += [f'  {i} [label="{label(v)}"];' for i, v in enumerate(G.vertices)]
    out += [f"  {i} -> {j} [dir=none];" for i, j in sorted(G.edges)]
    out += [f"  {i} -> {j};" for i, j in sorted(G.arcs)]
    out.append("}")
    return "\n".join(out) + "\n"
