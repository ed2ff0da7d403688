"""
Upper bounds and the feasibility table
======================================

Bosák's divisibility condition removes the Moore order for (z, r) = (2, 5),
and the parity argument then removes 51, so the 50-vertex G_5 is optimal.
"""
from mixedmoore import best_upper_bound, feasibility_table
from mixedmoore.moore import format_table

# %%
for z, r in [(1, 3), (2, 5), (3, 7)]:
    rep = best_upper_bound(z, r)
    print(f"(z={z}, r={r}):", rep.chain())
    for step in rep.steps:
        print("   ", step)

# %%
# Parameter sets up to order 200 that survive Bosák's condition.  Note the
# row n = 154 (z = 9, r = 3), which satisfies the condition with c = 3.
print(format_table(feasibility_table(200)))
