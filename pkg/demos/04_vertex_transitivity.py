"""
Symmetries of G_q
=================

The line/point swap theta and the maps psi(a, s) are automorphisms of
G_q = G_{q,0}; composing them moves [0, 0] to any vertex.
"""
from mixedmoore import field_new, g_qt, is_automorphism, orbits, psi, refine, theta
from mixedmoore.symmetry import transitivity_certificate

# %%
F = field_new(7)
G = g_qt(F, 0)
print("theta:", bool(is_automorphism(G, theta(F))))
print("all psi:", all(is_automorphism(G, psi(F, a, s)) for a in range(7) for s in range(7)))

# %%
cert = transitivity_certificate(F, G)
print(f"{len(cert)}/{G.order} targets certified")
for w, f in cert[:3] + cert[-2:]:
    print(f"  [0,0] -> {G.vertices[w]} via {f.tag}")

# %%
# For 0 < t < (q-1)/4 colour refinement cannot tell lines from points, but
# the exact orbit computation can.
G71 = g_qt(F, 1)
print("refinement cells:", len(refine(G71)), " orbits:", [len(o) for o in orbits(G71)])
print("theta on G_{7,1}:", bool(is_automorphism(G71, theta(F))))
