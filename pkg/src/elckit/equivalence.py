"""Pivot-equivalence of graphs: recognition and constructive sequences.

Two graphs are pivot-equivalent exactly when some operator H built by
``make_h`` maps one adjacency matrix to the other.  That condition is a
bilinear system in the indicator vector of the vertex set, so recognition
is one affine solve over GF(2).  A solution is then decomposed into an
explicit sequence of pivots by repeatedly clearing two support vertices
with the quadratic row transform ``f_transform``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import (
    AffineSolution,
    BitMatrix,
    BitVector,
    SingularMatrixError,
    VertexSet,
    principal_submatrix,
    rank,
    solve_affine,
)
from .graph import Graph, edge_local_complement
from .lft import NotInDomainError

__all__ = [
    "ElcSequence",
    "ReductionState",
    "replay",
    "f_transform",
    "f_double",
    "decompose_h",
    "recognize_elc",
    "recognize_elc_space",
    "elc_sequence_between",
    "invert_via_elc",
]


@dataclass(frozen=True)
class ElcSequence:
    """An ordered list of pivot edges over a fixed vertex count."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"pivot ({i},{j}) out of range 1..{self.n}")
            if i == j:
                raise ValueError(f"pivot ({i},{j}) has equal endpoints")

    def __iter__(self):
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def replay(g: Graph, seq: ElcSequence) -> Graph:
    """Apply the pivots in order; raises NotAnEdgeError on an illegal step."""
    if g.n != seq.n:
        raise ValueError("sequence and graph size mismatch")
    for e in seq.edges:
        g = edge_local_complement(g, e)
    return g


def f_transform(x: BitMatrix, i: int) -> BitMatrix:
    """Quadratic transform X -> X (E_i X + X_ii E_i + I) for vertex i.

    E_i is the diagonal unit at i.  Applied three times in the pattern
    i, j, i it mirrors a pivot on {i,j} at the matrix level.
    """
    if x.nrows != x.ncols:
        raise ValueError("square matrix required")
    if not 1 <= i <= x.nrows:
        raise ValueError(f"vertex {i} out of range 1..{x.nrows}")
    idx = i - 1
    n = x.nrows
    factor = [1 << k for k in range(n)]
    factor[idx] ^= x.rows[idx] ^ (((x.rows[idx] >> idx) & 1) << idx)
    return x @ BitMatrix(n, n, tuple(factor))


def f_double(x: BitMatrix, i: int, j: int) -> BitMatrix:
    """The composite transform for an ordered pair: i, then j, then i."""
    return f_transform(f_transform(f_transform(x, i), j), i)


@dataclass(frozen=True)
class ReductionState:
    """One round of the support-clearing loop.

    Invariant: r equals A Gamma + A + I for the current graph, where A is
    the diagonal indicator of the remaining support; r stays nonsingular
    until the support is empty and r has become the identity.
    """

    graph: Graph
    support: VertexSet
    emitted: tuple[tuple[int, int], ...]


def _reduction_rows(g: Graph, support_mask: int) -> tuple[int, ...]:
    """Rows of A Gamma + A + I: graph rows on the support, unit rows off it."""
    return tuple(
        g.adj.rows[k] if (support_mask >> k) & 1 else 1 << k for k in range(g.n)
    )


def decompose_h(g: Graph, a_set: VertexSet) -> ElcSequence:
    """Split a pivot-type operator into an explicit pivot sequence.

    Requires the principal submatrix of the adjacency matrix on the set to
    be nonsingular.  Each round pivots on the smallest support vertex i
    and the smallest j with R_ji = 1, removes both from the support, and
    continues on the pivoted graph, emitting |support|/2 edges in total.
    """
    if a_set.n != g.n:
        raise ValueError("vertex set and graph size mismatch")
    sub = principal_submatrix(g.adj, a_set)
    if rank(sub) != sub.nrows:
        raise NotInDomainError("principal submatrix on the set is singular")
    n = g.n
    state = ReductionState(g, a_set, ())
    expected: tuple[int, ...] | None = None
    while not state.support.is_empty():
        rows = _reduction_rows(state.graph, state.support.mask)
        assert expected is None or rows == expected
        i0 = (state.support.mask & -state.support.mask).bit_length() - 1
        j0 = -1
        for k in range(n):
            if (rows[k] >> i0) & 1:
                j0 = k
                break
        assert j0 >= 0 and j0 != i0
        assert (state.support.mask >> j0) & 1
        edge = (i0 + 1, j0 + 1)
        if __debug__:
            image = f_double(BitMatrix(n, n, rows), edge[0], edge[1])
            expected = image.rows
        state = ReductionState(
            edge_local_complement(state.graph, edge),
            VertexSet(n, state.support.mask ^ (1 << i0) ^ (1 << j0)),
            state.emitted + (edge,),
        )
    assert expected is None or expected == tuple(1 << k for k in range(n))
    return ElcSequence(n, state.emitted)


def _recognition_rows(g: Graph, g2: Graph) -> list[int]:
    """Coefficient rows of the bilinear system in the indicator vector.

    Row (k,l) of the n^2 x n system is the entrywise AND of row k of
    Gamma' + I with row l of Gamma + I; the unknown weights the columns.
    """
    n = g.n
    tg = [g.adj.rows[k] ^ (1 << k) for k in range(n)]
    th = [g2.adj.rows[k] ^ (1 << k) for k in range(n)]
    rows = []
    for k in range(n):
        hk = th[k]
        for l in range(n):
            rows.append(hk & tg[l])
    return rows


def recognize_elc_space(g: Graph, g2: Graph) -> AffineSolution | None:
    """Full affine solution set of the recognition system, or None.

    Each solution vector is the indicator of a vertex set whose operator
    maps g to g2; the homogeneous part does not depend on g2.
    """
    if g.n != g2.n:
        raise ValueError("graphs must have the same vertex count")
    n = g.n
    rows = _recognition_rows(g, g2)
    ybits = 0
    pos = 0
    for k in range(n):
        diff = g.adj.rows[k] ^ g2.adj.rows[k]
        ybits |= diff << pos
        pos += n
    system = BitMatrix(n * n, n, tuple(rows))
    return solve_affine(system, BitVector(n * n, ybits))


def recognize_elc(g: Graph, g2: Graph) -> VertexSet | None:
    """Vertex set realizing pivot-equivalence, or None if there is none.

    For identical graphs the answer is the empty set, since the particular
    solution of a homogeneous system is zero.
    """
    sol = recognize_elc_space(g, g2)
    if sol is None:
        return None
    return VertexSet(g.n, sol.particular.bits)


def elc_sequence_between(g: Graph, g2: Graph) -> ElcSequence | None:
    """Pivot sequence transforming g into g2 exactly, or None."""
    a_set = recognize_elc(g, g2)
    if a_set is None:
        return None
    seq = decompose_h(g, a_set)
    assert replay(g, seq) == g2
    return seq


def invert_via_elc(g: Graph) -> tuple[ElcSequence, Graph]:
    """Invert a nonsingular adjacency matrix purely by pivoting.

    Returns the pivot sequence over the full vertex set together with the
    resulting graph, whose adjacency matrix is the inverse of the input.
    """
    from .gf2 import inverse

    if rank(g.adj) != g.n:
        raise SingularMatrixError("adjacency matrix is singular")
    seq = decompose_h(g, VertexSet.full(g.n))
    result = replay(g, seq)
    assert result.adj == inverse(g.adj)
    return seq, result
