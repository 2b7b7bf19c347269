"""Dense bit-packed linear algebra over GF(2).

Rows are plain Python integers, with bit j holding column j, so a row
update during elimination is a single int-wide XOR and matrices of any
size work without word-size bookkeeping.  Elimination always pivots on
the leftmost eligible column using the topmost available row, which makes
every routine in this module deterministic.

By convention the empty 0x0 matrix is nonsingular with rank 0.  Callers
that take principal submatrices rely on this for the empty vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "SingularMatrixError",
    "BitVector",
    "BitMatrix",
    "VertexSet",
    "AffineSolution",
    "rank",
    "kernel_basis",
    "inverse",
    "solve_affine",
    "principal_submatrix",
    "offdiag_submatrix",
    "kronecker",
    "row_space_key",
]


class SingularMatrixError(ValueError):
    """Square matrix has no inverse over GF(2)."""


def _pack_entries(entries: Iterable[int | str]) -> tuple[int, int]:
    """Pack an iterable of 0/1 entries (a '0110' string works) into an int."""
    bits = 0
    n = 0
    for e in entries:
        v = int(e)
        if v not in (0, 1):
            raise ValueError(f"entries must be 0 or 1, got {e!r}")
        bits |= v << n
        n += 1
    return n, bits


@dataclass(frozen=True)
class BitVector:
    """Fixed-length GF(2) vector packed into one int (bit i = entry i)."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vector length")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_bits(cls, entries: Iterable[int | str]) -> BitVector:
        n, bits = _pack_entries(entries)
        return cls(n, bits)

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, i: int) -> BitVector:
        """Canonical basis vector with a single 1 at position i (0-based)."""
        if not 0 <= i < n:
            raise ValueError("unit index out of range")
        return cls(n, 1 << i)

    def __len__(self) -> int:
        return self.n

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError("index out of range")
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Positions of the nonzero entries, ascending, 0-based."""
        out = []
        m = self.bits
        while m:
            lsb = m & -m
            out.append(lsb.bit_length() - 1)
            m ^= lsb
        return tuple(out)

    def dot(self, other: BitVector) -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: BitVector) -> BitVector:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits & other.bits)

    def complement(self) -> BitVector:
        return BitVector(self.n, self.bits ^ ((1 << self.n) - 1))

    def to_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.n))


@dataclass(frozen=True)
class BitMatrix:
    """GF(2) matrix stored as a tuple of bit-packed row ints."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits set beyond ncols")

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int | str]]) -> BitMatrix:
        """Build from row entry sequences such as ["010", "101", "010"]."""
        packed = []
        width = None
        for row in rows:
            n, bits = _pack_entries(row)
            if width is None:
                width = n
            elif n != width:
                raise ValueError("ragged rows")
            packed.append(bits)
        return cls(len(packed), width if width is not None else 0, tuple(packed))

    @classmethod
    def from_row_bits(cls, ncols: int, rows: Iterable[int]) -> BitMatrix:
        rows = tuple(rows)
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.ncols:
            raise ValueError("column index out of range")
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r >> j) & 1) << i
        return BitVector(self.nrows, bits)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise ValueError("index out of range")
        return (self.rows[i] >> j) & 1

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            m = r
            while m:
                lsb = m & -m
                cols[lsb.bit_length() - 1] |= 1 << i
                m ^= lsb
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        orows = other.rows
        for r in self.rows:
            acc = 0
            m = r
            while m:
                lsb = m & -m
                acc ^= orows[lsb.bit_length() - 1]
                m ^= lsb
            out.append(acc)
        return BitMatrix(self.nrows, other.ncols, tuple(out))

    def mat_vec(self, v: BitVector) -> BitVector:
        if self.ncols != v.n:
            raise ValueError("shape mismatch in matrix-vector product")
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r & v.bits).bit_count() & 1) << i
        return BitVector(self.nrows, bits)

    def __xor__(self, other: BitMatrix) -> BitMatrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in matrix sum")
        return BitMatrix(
            self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows))
        )

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        rows = self.rows
        for i in range(self.nrows):
            ri = rows[i]
            for j in range(i + 1, self.ncols):
                if ((ri >> j) ^ (rows[j] >> i)) & 1:
                    return False
        return True

    def has_zero_diagonal(self) -> bool:
        return all(not (r >> i) & 1 for i, r in enumerate(self.rows))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def to_strings(self) -> list[str]:
        return [str(self.row(i)) for i in range(self.nrows)]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


@dataclass(frozen=True)
class VertexSet:
    """Subset of vertices {1..n}; also acts as a GF(2) diagonal matrix.

    Vertex labels are 1-based on the outside.  Bit v-1 of ``mask`` records
    membership of vertex v, so the mask lines up directly with 0-based
    row/column indices of a BitMatrix.
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative ambient size")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("mask has bits beyond ambient size")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
            mask |= 1 << (v - 1)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def members(self) -> tuple[int, ...]:
        """Member vertices, 1-based, ascending."""
        out = []
        m = self.mask
        while m:
            lsb = m & -m
            out.append(lsb.bit_length())
            m ^= lsb
        return tuple(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __contains__(self, v: int) -> bool:
        return 1 <= v <= self.n and (self.mask >> (v - 1)) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def is_empty(self) -> bool:
        return self.mask == 0

    def complement(self) -> VertexSet:
        return VertexSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def _check_same(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise ValueError("ambient size mismatch")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_same(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_same(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check_same(other)
        return VertexSet(self.n, self.mask ^ other.mask)

    def indicator(self) -> BitVector:
        """Membership as a vector: entry v-1 is 1 exactly for members v."""
        return BitVector(self.n, self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members()) + "}"


def _rref(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns).

    Only columns [0, ncols) are eligible as pivots; higher bits ride along
    untouched, which is how augmented systems are carried through.
    """
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == m:
            break
        bit = 1 << col
        src = -1
        for k in range(r, m):
            if rows[k] & bit:
                src = k
                break
        if src < 0:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        prow = rows[r]
        for k in range(m):
            if k != r and rows[k] & bit:
                rows[k] ^= prow
        pivots.append(col)
        r += 1
    return rows, pivots


def rank(m: BitMatrix) -> int:
    """Rank over GF(2)."""
    _, pivots = _rref(list(m.rows), m.ncols)
    return len(pivots)


def _kernel_from_rref(rows: list[int], pivots: list[int], ncols: int) -> list[int]:
    """Null-space basis vectors (as packed ints) from a reduced system."""
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = 1 << f
        fbit = 1 << f
        for idx, pcol in enumerate(pivots):
            if rows[idx] & fbit:
                vec |= 1 << pcol
        basis.append(vec)
    return basis


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the null space, returned as the columns of a matrix.

    The basis vectors are indexed by the free columns of the reduced
    system in ascending order, so the result is deterministic.
    """
    rows, pivots = _rref(list(m.rows), m.ncols)
    basis = _kernel_from_rref(rows, pivots, m.ncols)
    out_rows = [0] * m.ncols
    for k, vec in enumerate(basis):
        mm = vec
        while mm:
            lsb = mm & -mm
            out_rows[lsb.bit_length() - 1] |= 1 << k
            mm ^= lsb
    return BitMatrix(m.ncols, len(basis), tuple(out_rows))


def inverse(m: BitMatrix) -> BitMatrix:
    """Matrix inverse over GF(2); raises SingularMatrixError if none exists."""
    if m.nrows != m.ncols:
        raise ValueError("inverse requires a square matrix")
    n = m.nrows
    aug = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    aug, pivots = _rref(aug, n)
    if len(pivots) != n:
        raise SingularMatrixError(f"matrix of rank {len(pivots)} < {n} has no inverse")
    return BitMatrix(n, n, tuple(r >> n for r in aug))


@dataclass(frozen=True)
class AffineSolution:
    """Solution set of a consistent linear system: particular + null space.

    The full set is {particular + combination of homogeneous columns}; it
    has 2**homogeneous.ncols elements.
    """

    particular: BitVector
    homogeneous: BitMatrix

    @property
    def dimension(self) -> int:
        return self.homogeneous.ncols

    def solutions(self) -> Iterator[BitVector]:
        """Every solution, in ascending order of the combination index."""
        cols = [self.homogeneous.column(k).bits for k in range(self.homogeneous.ncols)]
        for combo in range(1 << len(cols)):
            bits = self.particular.bits
            m = combo
            while m:
                lsb = m & -m
                bits ^= cols[lsb.bit_length() - 1]
                m ^= lsb
            yield BitVector(self.particular.n, bits)


def solve_affine(m: BitMatrix, y: BitVector) -> AffineSolution | None:
    """Solve M x = y; returns None when the system is inconsistent.

    The particular solution is the one with all free variables zero, so
    for y = 0 it is the zero vector.
    """
    if y.n != m.nrows:
        raise ValueError("right-hand side length does not match row count")
    ncols = m.ncols
    aug = [r | (((y.bits >> i) & 1) << ncols) for i, r in enumerate(m.rows)]
    aug, pivots = _rref(aug, ncols)
    for k in range(len(pivots), len(aug)):
        if aug[k]:
            return None
    x = 0
    for idx, pcol in enumerate(pivots):
        if (aug[idx] >> ncols) & 1:
            x |= 1 << pcol
    basis = _kernel_from_rref(aug, pivots, ncols)
    out_rows = [0] * ncols
    for k, vec in enumerate(basis):
        mm = vec
        while mm:
            lsb = mm & -mm
            out_rows[lsb.bit_length() - 1] |= 1 << k
            mm ^= lsb
    return AffineSolution(
        BitVector(ncols, x), BitMatrix(ncols, len(basis), tuple(out_rows))
    )


def _require_square(m: BitMatrix) -> None:
    if m.nrows != m.ncols:
        raise ValueError("square matrix required")


def principal_submatrix(m: BitMatrix, omega: VertexSet) -> BitMatrix:
    """Rows and columns restricted to omega, both in ascending order."""
    _require_square(m)
    if omega.n != m.nrows:
        raise ValueError("vertex set does not match matrix size")
    idx = [v - 1 for v in omega.members()]
    out = []
    for i in idx:
        src = m.rows[i]
        packed = 0
        for pos, j in enumerate(idx):
            packed |= ((src >> j) & 1) << pos
        out.append(packed)
    k = len(idx)
    return BitMatrix(k, k, tuple(out))


def offdiag_submatrix(m: BitMatrix, omega: VertexSet) -> BitMatrix:
    """Rows in omega against columns outside omega, ascending both ways."""
    _require_square(m)
    if omega.n != m.nrows:
        raise ValueError("vertex set does not match matrix size")
    idx = [v - 1 for v in omega.members()]
    cdx = [v - 1 for v in omega.complement().members()]
    out = []
    for i in idx:
        src = m.rows[i]
        packed = 0
        for pos, j in enumerate(cdx):
            packed |= ((src >> j) & 1) << pos
        out.append(packed)
    return BitMatrix(len(idx), len(cdx), tuple(out))


def kronecker(u: BitVector, v: BitVector) -> BitVector:
    """Kronecker product: entry i*len(v)+j equals u_i * v_j."""
    bits = 0
    m = u.bits
    while m:
        lsb = m & -m
        bits |= v.bits << ((lsb.bit_length() - 1) * v.n)
        m ^= lsb
    return BitVector(u.n * v.n, bits)


def row_space_key(m: BitMatrix) -> tuple[int, ...]:
    """Canonical fingerprint of the row space: nonzero reduced rows, sorted.

    Two matrices have equal keys exactly when their rows span the same
    subspace, which is how span-valued invariants get compared.
    """
    rows, pivots = _rref(list(m.rows), m.ncols)
    return tuple(sorted(rows[: len(pivots)]))
