#!/usr/bin/env python3
"""How big is a pivot class?  Count it two ways and watch them agree.

The direct way walks the class edge by edge.  The closed-form way divides
the number of admissible vertex subsets by the number of subsets that fix
the graph.  Run:  python3 demos/02_counting_classes.py
"""

from elckit import (
    all_graphs,
    complete_graph,
    delta_count,
    elc_orbit,
    graph_key,
    sigma_space,
)

k3 = complete_graph(3)
print("triangle:")
print("  admissible subsets      delta =", delta_count(k3))
print("  stabilizer dimension    dim   =", sigma_space(k3).dim)
print("  subsets fixing K3       2^dim =", 1 << sigma_space(k3).dim)
print("  class size delta/2^dim        =", delta_count(k3) >> sigma_space(k3).dim)
print("  class walked explicitly       =", elc_orbit(k3).size)
print()

# full census on four vertices: every labeled graph, grouped into classes
print("census of all 64 labeled graphs on 4 vertices:")
print(f"  {'class rep (key)':>16} {'size':>5} {'delta':>6} {'2^dim':>6} {'formula':>8}")
seen = set()
classes = 0
for g in all_graphs(4):
    key = graph_key(g)
    if key in seen:
        continue
    orbit = elc_orbit(g)
    seen |= orbit.keys
    classes += 1
    formula = delta_count(g) >> sigma_space(g).dim
    mark = "ok" if formula == orbit.size else "MISMATCH"
    print(
        f"  {key:>16} {orbit.size:>5} {delta_count(g):>6}"
        f" {1 << sigma_space(g).dim:>6} {formula:>8}  {mark}"
    )
print(f"  -> {classes} classes covering {len(seen)} graphs")
