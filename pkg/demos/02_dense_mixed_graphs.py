"""
Dense mixed graphs G_{q,t}
==========================

Adding short "vertical" shifts to B_q, some as edges and the rest as arcs,
brings the diameter down from 4 to 2.
"""
from mixedmoore import (
    defect_t0,
    diameter,
    field_new,
    g_qt,
    is_mixed_moore,
    is_mixed_regular,
    mixed_moore_bound,
    shift_sets,
)
from mixedmoore.gf import max_t

# %%
# The shift sets for GF(13), t = 2.
print(shift_sets(field_new(13), 2))

# %%
# Every admissible t for a few q: order 2q^2, r = q + 2t, z = (q-1)/2 - 2t.
for q in (3, 5, 7, 9, 11, 13):
    F = field_new(q)
    for t in range(max_t(q) + 1):
        G = g_qt(F, t)
        z, r = is_mixed_regular(G)
        print(f"q={q:2d} t={t}  order={G.order:3d}  z={z} r={r:2d}  diameter={diameter(G)}"
              f"  Moore bound={mixed_moore_bound(z, r)}")

# %%
# t = 0: the defect grows like q^2/4.  q = 3 attains the bound (Bosák's graph).
for q in (3, 5, 7, 9, 11):
    print(q, defect_t0(q))
print("G_3 is a mixed Moore graph:", bool(is_mixed_moore(g_qt(field_new(3), 0))))
