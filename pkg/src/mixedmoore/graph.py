"""Mixed graphs (edges plus arcs) and their metrics.

A step along an edge may go either way; a step along an arc only from tail
to head.  Distances, diameter and the Moore predicate all use that rule.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Union

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .errors import VertexNotFound
from .moore import mixed_moore_bound

INF = float("inf")


@dataclass(frozen=True, order=True)
class Line:
    """The line [m, b] = {(x, mx + b)} of the biaffine plane."""

    m: int
    b: int

    def __repr__(self):
        return f"[{self.m},{self.b}]"


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __repr__(self):
        return f"({self.x},{self.y})"


# plain ints label vertices of graphs that do not come from a plane
Vertex = Union[Line, Point, int]


class DegreeTriple(NamedTuple):
    r: int
    z_out: int
    z_in: int


class MixedGraph:
    """An immutable simple mixed graph.

    ``edges`` and ``arcs`` are given as pairs of vertex *indices*.  Edges are
    unordered and stored as ``(i, j)`` with ``i < j``; repeated edges collapse.
    Digons (both ``(u, v)`` and ``(v, u)`` as arcs) are allowed, but an arc may
    not run parallel to an edge.
    """

    def __init__(self, vertices: Iterable[Vertex], edges=(), arcs=()):
        self.vertices: tuple = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        n = len(self.vertices)

        es = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop edge at {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            es.add((min(i, j), max(i, j)))
        as_ = set()
        for i, j in arcs:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop arc at {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arc ({i}, {j}) out of range")
            if (min(i, j), max(i, j)) in es:
                raise ValueError(f"arc ({i}, {j}) is parallel to an edge")
            as_.add((i, j))
        self.edges = frozenset(es)
        self.arcs = frozenset(as_)

        nbrs = [[] for _ in range(n)]
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for i, j in sorted(self.edges):
            nbrs[i].append(j)
            nbrs[j].append(i)
        for i, j in sorted(self.arcs):
            out[i].append(j)
            inn[j].append(i)
        self.nbrs = tuple(tuple(sorted(x)) for x in nbrs)
        self.out = tuple(tuple(x) for x in out)
        self.inn = tuple(tuple(sorted(x)) for x in inn)

    def __len__(self):
        return len(self.vertices)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self.vertices, self.edges, self.arcs) == (other.vertices, other.edges, other.arcs)

    def __repr__(self):
        return f"MixedGraph(order={self.order}, edges={len(self.edges)}, arcs={len(self.arcs)})"

    def vertex_index(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except (KeyError, TypeError):
            raise VertexNotFound(v) from None

    def successors(self, i: int) -> tuple[int, ...]:
        """Indices reachable from vertex index ``i`` in one step."""
        return self.nbrs[i] + self.out[i]

    def is_consistent(self) -> bool:
        """Rebuild the adjacency lists from the edge/arc sets and compare."""
        rebuilt = MixedGraph(self.vertices, self.edges, self.arcs)
        return (rebuilt.nbrs, rebuilt.out, rebuilt.inn) == (self.nbrs, self.out, self.inn)

    def edge_array(self) -> np.ndarray:
        return np.array(sorted(self.edges), dtype=np.int64).reshape(-1, 2)

    def arc_array(self) -> np.ndarray:
        return np.array(sorted(self.arcs), dtype=np.int64).reshape(-1, 2)

    @cached_property
    def step_matrix(self) -> sparse.csr_matrix:
        """Sparse 0/1 matrix with a 1 at (u, v) when v is one step from u."""
        e, a = self.edge_array(), self.arc_array()
        rows = np.concatenate([e[:, 0], e[:, 1], a[:, 0]])
        cols = np.concatenate([e[:, 1], e[:, 0], a[:, 1]])
        data = np.ones(len(rows), dtype=np.int8)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.order, self.order))

    def relabel(self, perm) -> "MixedGraph":
        """Copy in which old vertex ``i`` sits at position ``perm[i]``."""
        perm = [int(p) for p in perm]
        verts = [None] * self.order
        for i, p in enumerate(perm):
            verts[p] = self.vertices[i]
        return MixedGraph(
            verts,
            [(perm[i], perm[j]) for i, j in self.edges],
            [(perm[i], perm[j]) for i, j in self.arcs],
        )


def from_labels(vertices, edges=(), arcs=()) -> MixedGraph:
    """Build a graph from edges/arcs given as pairs of vertex labels."""
    vertices = list(vertices)
    idx = {v: i for i, v in enumerate(vertices)}
    return MixedGraph(vertices, [(idx[u], idx[v]) for u, v in edges], [(idx[u], idx[v]) for u, v in arcs])


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------

def degrees(G: MixedGraph, v: Vertex) -> DegreeTriple:
    i = G.vertex_index(v)
    return DegreeTriple(len(G.nbrs[i]), len(G.out[i]), len(G.inn[i]))


def is_mixed_regular(G: MixedGraph) -> Optional[tuple[int, int]]:
    """``(z, r)`` if every vertex has r edges, z out-arcs and z in-arcs, else None."""
    if G.order == 0:
        return None
    r, z = len(G.nbrs[0]), len(G.out[0])
    for i in range(G.order):
        if len(G.nbrs[i]) != r or len(G.out[i]) != z or len(G.inn[i]) != z:
            return None
    return z, r


def bfs_distances(G: MixedGraph, source: int) -> list:
    """Distances from vertex index ``source``; unreachable vertices get INF."""
    dist = [INF] * G.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.successors(u):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(G: MixedGraph, u: Vertex, v: Vertex):
    i, j = G.vertex_index(u), G.vertex_index(v)
    return bfs_distances(G, i)[j]


def distance_matrix(G: MixedGraph) -> np.ndarray:
    """All-pairs distances (float, ``inf`` when unreachable) by BFS from every source."""
    if G.order == 0:
        return np.zeros((0, 0))
    return csgraph.shortest_path(G.step_matrix, method="D", directed=True, unweighted=True)


def diameter(G: MixedGraph):
    """Largest distance over all ordered pairs; ``inf`` if some pair is unreachable."""
    if G.order == 0:
        return 0
    d = distance_matrix(G).max()
    return INF if np.isinf(d) else int(d)


def undirected_girth(G: MixedGraph):
    """Length of a shortest cycle made of edges only; arcs are ignored."""
    best = INF
    for root in range(G.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class MooreCheck:
    regular: Optional[tuple[int, int]]
    diameter: object
    order: int
    bound: Optional[int]

    def __bool__(self):
        return (
            self.regular is not None
            and self.diameter <= 2
            and self.order == self.bound
        )


def is_mixed_moore(G: MixedGraph) -> MooreCheck:
    """Mixed-regular, diameter at most 2, and order equal to (r+z)^2 + z + 1.

    The returned report is truthy exactly when G is a mixed Moore graph.
    """
    reg = is_mixed_regular(G)
    bound = mixed_moore_bound(*reg) if reg is not None and sum(reg) > 0 else None
    return MooreCheck(reg, diameter(G), G.order, bound)
