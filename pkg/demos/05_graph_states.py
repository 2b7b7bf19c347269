#!/usr/bin/env python3
"""Pivots seen through state vectors: partial Hadamards map one graph's
sign pattern to another's -- but only up to single-vertex sign flips.

Run:  python3 demos/05_graph_states.py
"""

from elckit import (
    VertexSet,
    amplitudes,
    apply_h_blockwise,
    apply_local_hadamard,
    complete_graph,
    in_domain,
    make_h,
    matches_up_to_flips,
    proportional,
    verify_theorem4,
)

k3 = complete_graph(3)
psi = amplitudes(k3)
print("triangle sign vector (+ for +1, - for -1, indices 000..111):")
print("   ", " ".join("+" if v > 0 else "-" for v in psi.values))
print()

# hit vertices 1 and 2 with Hadamards; {1,2} is admissible because the
# corresponding 2x2 corner of the adjacency matrix is invertible
omega = VertexSet.from_vertices(3, [1, 2])
print("admissible:", in_domain(make_h(omega), k3))
out = apply_local_hadamard(psi, omega)
print("transformed vector:", out.values)

target = apply_h_blockwise(omega, k3)
print("pivoted graph equals the triangle again:", target.adj == k3.adj)
phi = amplitudes(target)

# naive expectation: `out` is proportional to the target's sign vector.
# it is not -- the entry at index 001 came out negative, and no sign
# vector built from a quadratic form has a lone minus at a singleton.
print("plain proportionality:", proportional(out, phi))

# a sign flip on vertex 3 repairs it, and such flips are always enough
print("match up to per-vertex sign flips:", matches_up_to_flips(out, phi))
flipped = type(out)(out.n, tuple(
    -v if idx & 1 else v for idx, v in enumerate(out.values)
))
print("after flipping vertex 3 by hand, proportional:",
      proportional(flipped, phi))
print()

# the full dictionary: a vertex set passes the state-vector test exactly
# when its principal corner is invertible
print("subset  admissible  state-level check")
for mask in range(8):
    a = VertexSet(3, mask)
    print(f"{str(a):>6}  {str(in_domain(make_h(a), k3)):>10}"
          f"  {str(verify_theorem4(k3, a)):>17}")
print()

# inadmissible sets do not just miss the target graph: half the entries
# collapse to zero, so the result is no graph's sign vector at all
bad = apply_local_hadamard(psi, VertexSet.from_vertices(3, [1]))
print("inadmissible {1}:", bad.values)
