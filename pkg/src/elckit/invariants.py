"""Quantities preserved by pivoting: counting data and structural spaces.

The size of a pivot-equivalence class of labeled graphs is the number of
nonsingular principal submatrices divided by the size of the stabilizer
space, the kernel of the quadratic system solved by recognition.  Both
are computed here, along with the cheaper shared invariants (kernel of
Gamma + I, twin pairs, orthogonality) gathered into one report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, BitVector, VertexSet, kernel_basis, rank, row_space_key
from .graph import Graph, twins

__all__ = [
    "TooLargeError",
    "DEFAULT_SUBSET_CAP",
    "SigmaSpace",
    "corank_counts",
    "delta_count",
    "sigma_space",
    "class_size",
    "bineighborhood_space",
    "InvariantReport",
    "invariant_report",
]

DEFAULT_SUBSET_CAP = 24


class TooLargeError(ValueError):
    """Subset enumeration refused: 2**n would exceed the configured cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"subset enumeration over n={n} vertices exceeds cap {cap}")


def corank_counts(g: Graph, cap: int | None = None) -> tuple[int, ...]:
    """Histogram over all vertex subsets of the principal-submatrix corank.

    Entry m counts the subsets whose induced adjacency block has corank m;
    the empty set counts as corank 0.  Subsets are scanned in ascending
    binary order and each rank is eliminated from scratch.
    """
    limit = DEFAULT_SUBSET_CAP if cap is None else cap
    n = g.n
    if n > limit:
        raise TooLargeError(n, limit)
    rows = g.adj.rows
    counts = [0] * (n + 1)
    piv = [0] * (n + 1)
    for omega in range(1 << n):
        r = 0
        filled = []
        m = omega
        while m:
            lsb = m & -m
            m ^= lsb
            row = rows[lsb.bit_length() - 1] & omega
            while row:
                pb = row & -row
                pidx = pb.bit_length()
                p = piv[pidx]
                if p:
                    row ^= p
                else:
                    piv[pidx] = row
                    filled.append(pidx)
                    r += 1
                    break
        for pidx in filled:
            piv[pidx] = 0
        counts[omega.bit_count() - r] += 1
    return tuple(counts)


def delta_count(g: Graph, cap: int | None = None) -> int:
    """Number of vertex subsets inducing a nonsingular adjacency block."""
    return corank_counts(g, cap)[0]


@dataclass(frozen=True)
class SigmaSpace:
    """Stabilizer space of a graph under pivot-type operators.

    The columns of ``basis`` span the indicator vectors x for which
    (Gamma + I) diag(x) (Gamma + I) vanishes; the class-size formula
    divides by 2**dim.
    """

    n: int
    basis: BitMatrix

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def vectors(self) -> tuple[BitVector, ...]:
        return tuple(self.basis.column(k) for k in range(self.basis.ncols))

    def span_key(self) -> tuple[int, ...]:
        return row_space_key(self.basis.transpose())

    def contains(self, x: BitVector) -> bool:
        if x.n != self.n:
            raise ValueError("length mismatch")
        stacked = BitMatrix.from_row_bits(
            self.n, tuple(self.basis.transpose().rows) + (x.bits,)
        )
        return rank(stacked) == self.basis.ncols


def _tilde_rows(g: Graph) -> list[int]:
    return [g.adj.rows[k] ^ (1 << k) for k in range(g.n)]


def sigma_space(g: Graph) -> SigmaSpace:
    """Kernel of the quadratic system row (k,l) = row_k AND row_l of Gamma + I."""
    n = g.n
    tg = _tilde_rows(g)
    rows = []
    for k in range(n):
        rk = tg[k]
        for l in range(n):
            rows.append(rk & tg[l])
    basis = kernel_basis(BitMatrix(n * n, n, tuple(rows)))
    for k in range(basis.ncols):
        x = basis.column(k).bits
        for l in range(n):
            acc = 0
            m = tg[l] & x
            while m:
                lsb = m & -m
                acc ^= tg[lsb.bit_length() - 1]
                m ^= lsb
            assert acc == 0
    return SigmaSpace(n, basis)


def class_size(g: Graph, cap: int | None = None) -> int:
    """Number of labeled graphs pivot-equivalent to g.

    Equals delta_count divided by the stabilizer size; the division is
    exact and asserted.
    """
    d = delta_count(g, cap)
    s = sigma_space(g).dim
    assert d % (1 << s) == 0
    return d >> s


def bineighborhood_space(g: Graph) -> BitMatrix:
    """Span of common-neighborhood vectors over cycles and non-edges.

    The vector of a pair (i,j) marks the common neighbors of i and j.
    Generators are the sums over the fundamental cycles of a breadth-first
    spanning forest rooted at the smallest vertices, plus the vectors of
    all non-adjacent pairs.  Returned as basis columns.
    """
    n = g.n
    rows = g.adj.rows
    gens = []
    for i in range(n):
        nonadj = ~rows[i] & (((1 << n) - 1) >> (i + 1) << (i + 1))
        mm = nonadj
        while mm:
            lsb = mm & -mm
            j = lsb.bit_length() - 1
            gens.append(rows[i] & rows[j])
            mm ^= lsb
    visited = [False] * n
    nu_root = [0] * n
    tree_edges = set()
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            m = rows[u]
            while m:
                lsb = m & -m
                w = lsb.bit_length() - 1
                m ^= lsb
                if not visited[w]:
                    visited[w] = True
                    nu_root[w] = nu_root[u] ^ (rows[u] & rows[w])
                    tree_edges.add((min(u, w), max(u, w)))
                    queue.append(w)
    for i in range(n):
        m = rows[i] >> (i + 1)
        j = i + 1
        while m:
            if m & 1 and (i, j) not in tree_edges:
                gens.append((rows[i] & rows[j]) ^ nu_root[i] ^ nu_root[j])
            m >>= 1
            j += 1
    reduced = row_space_key(BitMatrix.from_row_bits(n, gens))
    out_rows = [0] * n
    for k, vec in enumerate(reduced):
        mm = vec
        while mm:
            lsb = mm & -mm
            out_rows[lsb.bit_length() - 1] |= 1 << k
            mm ^= lsb
    return BitMatrix(n, len(reduced), tuple(out_rows))


@dataclass(frozen=True)
class InvariantReport:
    """Pivot-invariant fingerprint of a graph.

    delta_count and class_size are None when the vertex count exceeds the
    enumeration cap; everything else is always present.
    """

    n: int
    sigma_dim: int
    rank_gamma_plus_i: int
    kernel: BitMatrix
    twin_pairs: tuple[tuple[int, int], ...]
    orthogonal: bool
    delta_count: int | None
    class_size: int | None

    def __post_init__(self) -> None:
        if self.delta_count is not None:
            assert self.class_size is not None
            assert self.class_size << self.sigma_dim == self.delta_count


def invariant_report(g: Graph, cap: int | None = None) -> InvariantReport:
    """Gather the invariants; enumeration-bound fields go absent above cap."""
    limit = DEFAULT_SUBSET_CAP if cap is None else cap
    n = g.n
    tilde = BitMatrix.from_row_bits(n, _tilde_rows(g))
    ker = kernel_basis(tilde)
    sigma = sigma_space(g)
    ortho = (g.adj @ g.adj) == BitMatrix.identity(n)
    if n <= limit:
        d = delta_count(g, limit)
        c = d >> sigma.dim
    else:
        d = None
        c = None
    return InvariantReport(
        n=n,
        sigma_dim=sigma.dim,
        rank_gamma_plus_i=n - ker.ncols,
        kernel=ker,
        twin_pairs=tuple(twins(g)),
        orthogonal=ortho,
        delta_count=d,
        class_size=c,
    )
