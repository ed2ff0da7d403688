"""The biaffine incidence graph B_q, the mixed graphs G_{q,t} and the
digon-collapsed Kautz graphs."""
from __future__ import annotations

import itertools
from typing import Optional

from .errors import DegreeTooSmall
from .gf import FieldSpec, ShiftSets, shift_sets
from .graph import Line, MixedGraph, Point


def plane_vertices(q: int) -> list:
    """Lines ordered by (m, b), then points ordered by (x, y)."""
    return [Line(m, b) for m in range(q) for b in range(q)] + [
        Point(x, y) for x in range(q) for y in range(q)
    ]


def line_index(q, m, b):
    return m * q + b


def point_index(q, x, y):
    return q * q + x * q + y


def _incidence_edges(F: FieldSpec):
    q = F.q
    add, mul = F.add_table, F.mul_table
    return [
        (line_index(q, m, b), point_index(q, x, int(add[mul[m, x], b])))
        for m in range(q)
        for b in range(q)
        for x in range(q)
    ]


def biaffine(F: FieldSpec) -> MixedGraph:
    """Incidence graph of the biaffine plane: [m, b] ~ (x, mx + b)."""
    return MixedGraph(plane_vertices(F.q), _incidence_edges(F))


def g_qt(F: FieldSpec, t: int = 0, shifts: Optional[ShiftSets] = None) -> MixedGraph:
    """The mixed graph G_{q,t}.

    On top of B_q, each line [m, b] gets edges to [m, b + i] for i in T1 and
    arcs to [m, b + i] for i in S; each point (x, y) gets edges to (x, y + j)
    for j in T2 and arcs to (x, y + j) for j in -S.  The result is
    mixed-regular with r = q + 2t and z = (q-1)/2 - 2t.

    ``shifts`` overrides the canonical shift sets (it must match F and t).
    """
    if shifts is None:
        shifts = shift_sets(F, t)
    elif shifts.q != F.q or shifts.t != t:
        raise ValueError("shift sets were built for a different (q, t)")
    q = F.q
    add = F.add_table
    edges = _incidence_edges(F)
    arcs = []
    for u, w in itertools.product(range(q), repeat=2):
        # u plays the role of m (lines) and x (points); w that of b and y
        for i in shifts.T1:
            edges.append((line_index(q, u, w), line_index(q, u, int(add[w, i]))))
        for j in shifts.T2:
            edges.append((point_index(q, u, w), point_index(q, u, int(add[w, j]))))
        for i in shifts.S:
            arcs.append((line_index(q, u, w), line_index(q, u, int(add[w, i]))))
        for j in shifts.negS:
            arcs.append((point_index(q, u, w), point_index(q, u, int(add[w, j]))))
    return MixedGraph(plane_vertices(q), edges, arcs)


def kautz_vertices(d: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(d + 1) for b in range(d + 1) if a != b]


def kautz_mixed(d: int) -> MixedGraph:
    """Kautz digraph K(d, 2) with every digon replaced by an undirected edge.

    Vertex ``k`` is the k-th pair (a, b), a != b, over the alphabet 0..d in
    lexicographic order (see :func:`kautz_vertices`).
    """
    if d < 2:
        raise DegreeTooSmall(f"d={d} must be >= 2")
    labels = kautz_vertices(d)
    idx = {v: k for k, v in enumerate(labels)}
    arcs = {(idx[(a, b)], idx[(b, c)]) for a, b in labels for c in range(d + 1) if c != b}
    edges = {(min(u, v), max(u, v)) for u, v in arcs if (v, u) in arcs}
    arcs = {(u, v) for u, v in arcs if (v, u) not in arcs}
    return MixedGraph(range(len(labels)), edges, arcs)

