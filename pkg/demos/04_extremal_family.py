"""The extremal family G_k: few Petersen copies on many vertices.

G_k has 6k+14 vertices, no matched 4-cycle, and exactly 6k+6 Petersen
copies: each of the two groups of four special edges pairs with every one
of the remaining 3k+3 edges, and nothing else certifies.  That makes the
linear lower bound (n/2 - 4 copies once n >= 40) tight up to a constant.
"""

from mpgraphs import (
    check_lower_bound,
    classify_edge,
    find_p10_through,
    generate_gk,
    is_cyclically_5_edge_connected,
    verify_gk,
)

print(f"{'k':>2} {'m':>3} {'n':>3} {'c4':>3} {'p10':>4} {'6k+6':>5} {'bound n/2-4':>12} ok")
for k in range(1, 7):
    inst = generate_gk(k)
    v = verify_gk(inst)
    lb = check_lower_bound(inst.graph)
    bound = f"{lb.p10_count} >= {lb.required}" if lb.applicable else "n < 40"
    print(
        f"{k:>2} {inst.m:>3} {inst.graph.n:>3} {v.c4_count:>3} {v.p10_count:>4} "
        f"{v.expected_p10:>5} {bound:>12} {v.ok}"
    )

inst = generate_gk(2)
print(f"\nG_2 edge classes: "
      f"{[classify_edge(inst, i).kind.value[0] for i in range(inst.m)]}")
print(f"special groups: {inst.special_group(1)} and {inst.special_group(2)}")

e = 0  # a vertical edge
X, _ = find_p10_through(inst.graph, e)
print(f"\nwitness through vertical edge {e}: {list(X)}")
print("  = that edge plus one full special group")

print(f"\ncyclically 5-edge-connected? {is_cyclically_5_edge_connected(inst.graph)}")
print("(the family trades connectivity for scarcity of Petersen copies)")
