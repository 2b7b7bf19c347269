#!/usr/bin/env python3
"""Pivoting on edges, and deciding whether two graphs are pivot-connected.

Run:  python3 demos/01_pivot_moves.py
"""

import random

from elckit import (
    apply_h_blockwise,
    cycle_graph,
    decompose_h,
    edge_local_complement,
    path_graph,
    recognize_elc,
    replay,
)


def show(title, g):
    print(f"{title}  (n={g.n}, edges={g.edges()})")
    for row in g.adj.to_strings():
        print("   ", row)
    print()


def main():
    g = path_graph(4)
    show("P4", g)

    # pivot on the middle edge: neighbours of 2 get toggled against
    # neighbours of 3, and the edge's endpoints swap their outside links
    h = edge_local_complement(g, (2, 3))
    show("P4 pivoted on (2,3)", h)

    # pivoting the same edge again undoes the move
    back = edge_local_complement(h, (2, 3))
    print("pivot is an involution:", back.adj == g.adj)
    print()

    # scramble a 5-cycle with random pivots, then recover a route back
    rng = random.Random(7)
    start = cycle_graph(5)
    walked = start
    for _ in range(6):
        walked = edge_local_complement(walked, rng.choice(walked.edges()))
    show("C5 after six random pivots", walked)

    a_set = recognize_elc(start, walked)
    print("pivot-connected:", a_set is not None)
    print("certificate vertex set A =", a_set)
    print("one-shot check:", apply_h_blockwise(a_set, start).adj == walked.adj)

    seq = decompose_h(start, a_set)
    print("as single pivots:", list(seq.edges))
    print("replay reaches the target:", replay(start, seq).adj == walked.adj)


if __name__ == "__main__":
    main()
