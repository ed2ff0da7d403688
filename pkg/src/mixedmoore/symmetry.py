"""Explicit automorphisms of G_q, transitivity certificates, colour
refinement and a small individualisation-refinement isomorphism search.

Maps on plane graphs assume the vertex order produced by
:func:`mixedmoore.construction.plane_vertices` (lines first, then points).
The translation parameter of the psi maps is called ``s`` here, to keep it
apart from the ``t`` of G_{q,t}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .construction import line_index, plane_vertices, point_index
from .errors import CertificateFailure
from .gf import FieldSpec
from .graph import Line, MixedGraph, Point


@dataclass(frozen=True)
class VertexMap:
    """Vertex ``i`` goes to vertex ``perm[i]``; ``tag`` records the formula."""

    perm: np.ndarray
    tag: str = "explicit"

    def __call__(self, i: int) -> int:
        return int(self.perm[i])

    def __len__(self):
        return len(self.perm)

    def then(self, other: "VertexMap") -> "VertexMap":
        """Apply self first, then ``other``."""
        return VertexMap(other.perm[self.perm], f"{other.tag}*{self.tag}")

    def inverse(self) -> "VertexMap":
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(len(self.perm))
        return VertexMap(inv, f"inv({self.tag})")

    def is_bijection(self) -> bool:
        n = len(self.perm)
        return bool(np.array_equal(np.sort(self.perm), np.arange(n)))


def compose(f: VertexMap, g: VertexMap) -> VertexMap:
    """f o g (g applied first)."""
    return g.then(f)


def identity(n: int) -> VertexMap:
    return VertexMap(np.arange(n), "id")


def _plane_map(F: FieldSpec, on_line, on_point, tag) -> VertexMap:
    q = F.q
    perm = np.empty(2 * q * q, dtype=np.int64)
    for k, v in enumerate(plane_vertices(q)):
        w = on_line(v.m, v.b) if isinstance(v, Line) else on_point(v.x, v.y)
        perm[k] = line_index(q, w.m, w.b) if isinstance(w, Line) else point_index(q, w.x, w.y)
    return VertexMap(perm, tag)


def theta(F: FieldSpec) -> VertexMap:
    """[m, b] -> (-m, -b) and (x, y) -> [-x, -y]; swaps lines and points."""
    neg = F.neg
    return _plane_map(
        F,
        lambda m, b: Point(neg(m), neg(b)),
        lambda x, y: Line(neg(x), neg(y)),
        "theta",
    )


def psi(F: FieldSpec, a: int, s: int) -> VertexMap:
    """[m, b] -> [-m, b + am + s] and (x, y) -> (-x + a, y + s)."""
    add, mul, neg = F.add, F.mul, F.neg
    return _plane_map(
        F,
        lambda m, b: Line(neg(m), add(add(b, mul(a, m)), s)),
        lambda x, y: Point(add(neg(x), a), add(y, s)),
        f"psi({a},{s})",
    )


def translate(F: FieldSpec, c: int, u: int) -> VertexMap:
    """[m, b] -> [m, b - cm + u] and (x, y) -> (x + c, y + u).

    Composing two psi maps lands in this family:
    psi(a, s) o psi(a', s') = translate(a - a', s + s').
    """
    add, sub, mul = F.add, F.sub, F.mul
    return _plane_map(
        F,
        lambda m, b: Line(m, add(sub(b, mul(c, m)), u)),
        lambda x, y: Point(add(x, c), add(y, u)),
        f"translate({c},{u})",
    )


@dataclass(frozen=True)
class MapCheck:
    ok: bool
    counterexample: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def is_automorphism(G: MixedGraph, f: VertexMap, H: Optional[MixedGraph] = None) -> MapCheck:
    """Whether f maps edges onto edges and arcs onto arcs (orientation kept).

    With ``H`` given, checks that f is an isomorphism G -> H instead.  On
    failure the counterexample is ``("edge" | "arc" | "bijection", pair)``.
    """
    H = G if H is None else H
    if len(f) != G.order or G.order != H.order or not f.is_bijection():
        return MapCheck(False, ("bijection", None))
    if len(G.edges) != len(H.edges) or len(G.arcs) != len(H.arcs):
        return MapCheck(False, ("size", None))
    # a bijection sending E into E' with |E| = |E'| sends non-edges to non-edges too
    for i, j in sorted(G.edges):
        a, b = f(i), f(j)
        if (min(a, b), max(a, b)) not in H.edges:
            return MapCheck(False, ("edge", (i, j)))
    for i, j in sorted(G.arcs):
        if (f(i), f(j)) not in H.arcs:
            return MapCheck(False, ("arc", (i, j)))
    return MapCheck(True)


def transitivity_certificate(F: FieldSpec, G: MixedGraph) -> list[tuple[int, VertexMap]]:
    """For every vertex w of G_q, an automorphism sending [0, 0] to w.

    Points are reached with psi(x, y) o theta; lines with
    theta o psi(-m, -b) o theta.  Every map is checked against G.
    """
    q = F.q
    th = theta(F)
    base = line_index(q, 0, 0)
    out = []
    for w, v in enumerate(G.vertices):
        if w == base:
            f = identity(G.order)
        elif isinstance(v, Point):
            f = th.then(psi(F, v.x, v.y))
        else:
            f = th.then(psi(F, F.neg(v.m), F.neg(v.b))).then(th)
        if f(base) != w:
            raise CertificateFailure(f"{f.tag} sends [0,0] to {G.vertices[f(base)]}, not {v}")
        check = is_automorphism(G, f)
        if not check:
            raise CertificateFailure(f"{f.tag} is not an automorphism: {check.counterexample}")
        out.append((w, f))
    if sorted(w for w, _ in out) != list(range(G.order)):
        raise CertificateFailure("certificate does not cover every vertex")
    return out


# ---------------------------------------------------------------------------
# colour refinement and isomorphism search
# ---------------------------------------------------------------------------

def _refine_colors(G: MixedGraph, colors) -> list[int]:
    colors = list(colors)
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in G.nbrs[v])),
                tuple(sorted(colors[w] for w in G.out[v])),
                tuple(sorted(colors[w] for w in G.inn[v])),
            )
            for v in range(G.order)
        ]
        rank = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _cells(colors) -> list[list[int]]:
    groups = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def refine(G: MixedGraph, colors=None) -> list[list[int]]:
    """Stable colour-refinement partition of the vertex indices.

    A vertex's signature is its colour together with the colour multisets of
    its edge-neighbours, out-neighbours and in-neighbours.  Cells come out
    ordered by their canonical colour.
    """
    if colors is None:
        colors = [0] * G.order
    return _cells(_refine_colors(G, colors))


def _disjoint_union(G: MixedGraph, H: MixedGraph) -> MixedGraph:
    n = G.order
    return MixedGraph(
        range(2 * n),
        list(G.edges) + [(i + n, j + n) for i, j in H.edges],
        list(G.arcs) + [(i + n, j + n) for i, j in H.arcs],
    )


def _search(U: MixedGraph, n: int, colors, G, H) -> Optional[VertexMap]:
    colors = _refine_colors(U, colors)
    left, right = {}, {}
    for v, c in enumerate(colors):
        (left if v < n else right).setdefault(c, []).append(v)
    if {c: len(vs) for c, vs in left.items()} != {c: len(vs) for c, vs in right.items()}:
        return None
    if all(len(vs) == 1 for vs in left.values()):
        perm = np.empty(n, dtype=np.int64)
        for c, (v,) in left.items():
            perm[v] = right[c][0] - n
        f = VertexMap(perm, "explicit")
        return f if is_automorphism(G, f, H) else None
    size, c = min((len(vs), c) for c, vs in left.items() if len(vs) > 1)
    u = left[c][0]
    fresh = max(colors) + 1
    for w in right[c]:
        trial = list(colors)
        trial[u] = trial[w] = fresh
        found = _search(U, n, trial, G, H)
        if found is not None:
            return found
    return None


def find_isomorphism(G: MixedGraph, H: MixedGraph, pin: Optional[tuple[int, int]] = None) -> Optional[VertexMap]:
    """An isomorphism G -> H, or None.  ``pin=(u, w)`` forces u to map to w."""
    n = G.order
    if (n, len(G.edges), len(G.arcs)) != (H.order, len(H.edges), len(H.arcs)):
        return None
    U = _disjoint_union(G, H)
    colors = [0] * (2 * n)
    if pin is not None:
        colors[pin[0]] = colors[pin[1] + n] = 1
    return _search(U, n, colors, G, H)


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: Optional[VertexMap] = None

    def __bool__(self):
        return self.isomorphic


def is_isomorphic(G: MixedGraph, H: MixedGraph) -> IsoResult:
    """Exhaustive isomorphism test; meant for a few hundred vertices at most."""
    f = find_isomorphism(G, H)
    return IsoResult(f is not None, f)


def orbits(G: MixedGraph) -> list[list[int]]:
    """Exact automorphism orbits, by searching for a pinned automorphism
    between every pair of refinement-equivalent vertices not yet joined.

    Cost grows quickly with the order; keep it to small graphs.
    """
    parent = list(range(G.order))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for cell in refine(G):
        reps = []
        for w in cell:
            for u in reps:
                if find(u) == find(w):
                    break
                f = find_isomorphism(G, G, pin=(u, w))
                if f is not None:
                    for i in range(G.order):
                        a, b = find(i), find(f(i))
                        if a != b:
                            parent[a] = b
                    break
            else:
                reps.append(w)
    return _cells([find(v) for v in range(G.order)])
