#!/usr/bin/env python3
"""Inverting an adjacency matrix over GF(2) without Gaussian elimination:
pivot the graph until it lands on its own inverse.

Run:  python3 demos/04_matrix_inverse.py
"""

from elckit import (
    BitMatrix,
    SingularMatrixError,
    cycle_graph,
    inverse,
    invert_via_elc,
    path_graph,
    replay,
)

g = path_graph(4)
print("P4 adjacency:")
for row in g.adj.to_strings():
    print("   ", row)

seq, inv = invert_via_elc(g)
print("pivot sequence:", list(seq.edges))
print("resulting graph's adjacency:")
for row in inv.adj.to_strings():
    print("   ", row)

print("product with the original is the identity:",
      g.adj @ inv.adj == BitMatrix.identity(4))
print("agrees with elimination-based inverse:", inv.adj == inverse(g.adj))
print("replaying the pivots on P4 lands on the inverse:",
      replay(g, seq).adj == inv.adj)
print()

# odd cycles cannot work: an adjacency matrix is alternating (symmetric,
# zero diagonal) and alternating matrices of odd size are always singular
try:
    invert_via_elc(cycle_graph(5))
except SingularMatrixError as e:
    print("C5 has no inverse over GF(2):", e)

# even cycles can fail too; C4's matrix has rank 2
try:
    invert_via_elc(cycle_graph(4))
except SingularMatrixError as e:
    print("C4 has no inverse either:", e)
