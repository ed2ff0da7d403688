"""
The biaffine plane and its incidence graph
==========================================

Lines [m, b] = {(x, mx + b)} over GF(q) and the q^2 points of the affine
plane give a q-regular bipartite graph B_q on 2q^2 vertices.
"""
from mixedmoore import biaffine, diameter, distance, field_new, undirected_girth
from mixedmoore.graph import Line, Point

# %%
# GF(9) is built from the first irreducible quadratic over Z_3, x^2 + 1.
F = field_new(9)
print(F, "  x*x =", F.mul(3, 3))

# %%
# Order, diameter and girth for a few fields.  q = 2 is the 8-cycle.
for q in (2, 3, 4, 5, 7, 9):
    B = biaffine(field_new(q))
    print(f"q={q:2d}  order={B.order:4d}  diameter={diameter(B)}  girth={undirected_girth(B)}")

# %%
# Parallel lines and points on a common vertical are the only pairs at
# distance 4.
B = biaffine(field_new(5))
print(distance(B, Line(2, 0), Line(2, 3)), distance(B, Point(1, 1), Point(1, 4)))
print(distance(B, Line(2, 0), Line(3, 0)), distance(B, Line(2, 0), Point(4, 1)))
