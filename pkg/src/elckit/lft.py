"""Linear fractional maps on adjacency matrices over GF(2).

An operator is a quadruple of diagonal matrices (A, B, C, D) acting as
Gamma -> (A Gamma + B) (C Gamma + D)^-1.  Per vertex the four diagonal
entries form an invertible 2x2 matrix over GF(2), so the operators form a
group under blockwise multiplication.  The involutions with A = D and
B = C = A + I are the ones generated by pivots; ``make_h`` builds them
from a vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import (
    BitMatrix,
    BitVector,
    SingularMatrixError,
    VertexSet,
    inverse,
    offdiag_submatrix,
    principal_submatrix,
    rank,
)
from .graph import Graph

__all__ = [
    "NotInDomainError",
    "SingularDenominatorError",
    "NonzeroDiagonalError",
    "LftOp",
    "identity_op",
    "make_h",
    "lc_operator",
    "compose",
    "in_domain",
    "apply",
    "apply_h_blockwise",
    "bilinear_check",
]


class NotInDomainError(ValueError):
    """The graph lies outside the domain of the operator."""


class SingularDenominatorError(NotInDomainError):
    """C Gamma + D is singular, so the image is undefined."""


class NonzeroDiagonalError(NotInDomainError):
    """The image matrix exists but fails to be an adjacency matrix."""


@dataclass(frozen=True)
class LftOp:
    """Four packed diagonals; entry i of each gives the 2x2 block at vertex i."""

    a: BitVector
    b: BitVector
    c: BitVector
    d: BitVector

    def __post_init__(self) -> None:
        n = self.a.n
        if not (self.b.n == n and self.c.n == n and self.d.n == n):
            raise ValueError("diagonal length mismatch")
        full = (1 << n) - 1
        det = (self.a.bits & self.d.bits) ^ (self.b.bits & self.c.bits)
        if det != full:
            raise ValueError("per-vertex blocks must be invertible (ad + bc = 1)")

    @property
    def n(self) -> int:
        return self.a.n


def identity_op(n: int) -> LftOp:
    ones = BitVector(n, (1 << n) - 1)
    zero = BitVector(n, 0)
    return LftOp(ones, zero, zero, ones)


def make_h(a_set: VertexSet) -> LftOp:
    """Pivot-type involution for a vertex set: [A+I, A, A, A+I]."""
    n = a_set.n
    ind = BitVector(n, a_set.mask)
    co = ind.complement()
    return LftOp(co, ind, ind, co)


def lc_operator(g: Graph, i: int) -> LftOp:
    """Operator [I, diag of row i, unit at i, I]; maps g to its complement at i."""
    g._check_vertex(i)
    n = g.n
    ones = BitVector(n, (1 << n) - 1)
    return LftOp(
        ones,
        BitVector(n, g.adj.rows[i - 1]),
        BitVector.unit(n, i - 1),
        ones,
    )


def compose(q2: LftOp, q1: LftOp) -> LftOp:
    """Blockwise product q2 * q1: the operator applying q1 first."""
    if q2.n != q1.n:
        raise ValueError("operator size mismatch")
    a2, b2, c2, d2 = q2.a.bits, q2.b.bits, q2.c.bits, q2.d.bits
    a1, b1, c1, d1 = q1.a.bits, q1.b.bits, q1.c.bits, q1.d.bits
    n = q1.n
    return LftOp(
        BitVector(n, (a2 & a1) ^ (b2 & c1)),
        BitVector(n, (a2 & b1) ^ (b2 & d1)),
        BitVector(n, (c2 & a1) ^ (d2 & c1)),
        BitVector(n, (c2 & b1) ^ (d2 & d1)),
    )


def in_domain(q: LftOp, g: Graph) -> bool:
    """Domain test without forming the image.

    The graph is in the domain exactly when the principal submatrix of
    Gamma + D on the support of C is nonsingular and Gamma maps the
    entrywise product ac to the entrywise product bd.
    """
    if q.n != g.n:
        raise ValueError("operator and graph size mismatch")
    omega = VertexSet(g.n, q.c.bits)
    sub = principal_submatrix(g.adj, omega)
    d_on = [(q.d.bits >> (v - 1)) & 1 for v in omega.members()]
    srows = tuple(r ^ (bit << pos) for pos, (r, bit) in enumerate(zip(sub.rows, d_on)))
    sub = BitMatrix(sub.nrows, sub.ncols, srows)
    if rank(sub) != sub.nrows:
        return False
    ac = BitVector(g.n, q.a.bits & q.c.bits)
    bd = BitVector(g.n, q.b.bits & q.d.bits)
    return g.adj.mat_vec(ac) == bd


def _diag_affine_rows(g: Graph, scale: BitVector, shift: BitVector) -> BitMatrix:
    """Rows of scale*Gamma + shift for diagonal scale and shift."""
    n = g.n
    rows = []
    for i in range(n):
        r = g.adj.rows[i] if (scale.bits >> i) & 1 else 0
        if (shift.bits >> i) & 1:
            r ^= 1 << i
        rows.append(r)
    return BitMatrix(n, n, tuple(rows))


def apply(q: LftOp, g: Graph) -> Graph:
    """Image graph (A Gamma + B)(C Gamma + D)^-1; raises when undefined.

    SingularDenominatorError and NonzeroDiagonalError distinguish the two
    failure modes; both mean the graph is outside the domain.
    """
    if q.n != g.n:
        raise ValueError("operator and graph size mismatch")
    denom = _diag_affine_rows(g, q.c, q.d)
    numer = _diag_affine_rows(g, q.a, q.b)
    try:
        inv = inverse(denom)
    except SingularMatrixError:
        raise SingularDenominatorError("C Gamma + D is singular") from None
    image = numer @ inv
    if not image.has_zero_diagonal():
        raise NonzeroDiagonalError("image has a nonzero diagonal entry")
    assert image.is_symmetric()
    return Graph(image)


def apply_h_blockwise(a_set: VertexSet, g: Graph) -> Graph:
    """Pivot-type image assembled from three blocks, no full inversion.

    With omega the given set: the omega block becomes the inverse of the
    original omega block, the mixed block is that inverse times the old
    mixed block, and the outside block picks up the product of the mixed
    blocks through the inverse.
    """
    if a_set.n != g.n:
        raise ValueError("vertex set and graph size mismatch")
    if a_set.is_empty():
        return g
    n = g.n
    sub = principal_submatrix(g.adj, a_set)
    try:
        inv = inverse(sub)
    except SingularMatrixError:
        raise SingularDenominatorError(
            "principal submatrix on the set is singular"
        ) from None
    off = offdiag_submatrix(g.adj, a_set)
    mid = inv @ off
    out_block = principal_submatrix(g.adj, a_set.complement()) ^ (off.transpose() @ mid)
    omega_idx = [v - 1 for v in a_set.members()]
    comp_idx = [v - 1 for v in a_set.complement().members()]
    rows = [0] * n
    for p, gi in enumerate(omega_idx):
        r = 0
        for qq, gj in enumerate(omega_idx):
            r |= ((inv.rows[p] >> qq) & 1) << gj
        for qq, gj in enumerate(comp_idx):
            r |= ((mid.rows[p] >> qq) & 1) << gj
        rows[gi] = r
    for p, gi in enumerate(comp_idx):
        r = 0
        for qq, gj in enumerate(omega_idx):
            r |= ((mid.rows[qq] >> p) & 1) << gj
        for qq, gj in enumerate(comp_idx):
            r |= ((out_block.rows[p] >> qq) & 1) << gj
        rows[gi] = r
    return Graph(BitMatrix(n, n, tuple(rows)))


def bilinear_check(q: LftOp, g: Graph, g2: Graph) -> bool:
    """Test Gamma' C Gamma + A Gamma + Gamma' D + B = 0 without inverting.

    Holds exactly when g is in the domain of q and the image equals g2.
    """
    if q.n != g.n or g.n != g2.n:
        raise ValueError("size mismatch")
    n = g.n
    grows = g.adj.rows
    hrows = g2.adj.rows
    for k in range(n):
        acc = 0
        m = hrows[k] & q.c.bits
        while m:
            lsb = m & -m
            acc ^= grows[lsb.bit_length() - 1]
            m ^= lsb
        if (q.a.bits >> k) & 1:
            acc ^= grows[k]
        acc ^= hrows[k] & q.d.bits
        if (q.b.bits >> k) & 1:
            acc ^= 1 << k
        if acc:
            return False
    return True
