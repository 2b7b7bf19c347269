"""Simple labeled graphs and the two complementation moves.

Vertices carry 1-based labels on every public surface (arguments, results,
file formats, CLI); adjacency rows are 0-indexed internally.  The two
moves are local complementation at a vertex (complement the subgraph
induced on its neighborhood) and edge-local complementation at an edge,
also known as pivoting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .gf2 import BitMatrix, VertexSet

__all__ = [
    "NotAnEdgeError",
    "Graph",
    "local_complement",
    "edge_local_complement",
    "elc_by_local_complements",
    "twins",
    "girth",
    "srg_check",
    "generate",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "petersen_graph",
    "clebsch_graph",
    "graph_key",
    "graph_from_key",
    "all_graphs",
]


class NotAnEdgeError(ValueError):
    """Edge-local complementation was asked for a pair that is not an edge."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as a symmetric zero-diagonal GF(2) matrix."""

    adj: BitMatrix

    def __post_init__(self) -> None:
        if self.adj.nrows != self.adj.ncols:
            raise ValueError("adjacency matrix must be square")
        if not self.adj.has_zero_diagonal():
            raise ValueError("adjacency matrix must have zero diagonal")
        if not self.adj.is_symmetric():
            raise ValueError("adjacency matrix must be symmetric")

    @property
    def n(self) -> int:
        return self.adj.nrows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) out of range 1..{n}")
            if i == j:
                raise ValueError(f"loop at vertex {i} not allowed")
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return cls(BitMatrix(n, n, tuple(rows)))

    def has_edge(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return (self.adj.rows[i - 1] >> (j - 1)) & 1 == 1

    def neighbors(self, i: int) -> tuple[int, ...]:
        self._check_vertex(i)
        out = []
        m = self.adj.rows[i - 1]
        while m:
            lsb = m & -m
            out.append(lsb.bit_length())
            m ^= lsb
        return tuple(out)

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.adj.rows[i - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            m = self.adj.rows[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((i + 1, j + 1))
                m >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj.rows) // 2

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.from_vertices(self.n, members)

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex {i} out of range 1..{self.n}")

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def local_complement(g: Graph, i: int) -> Graph:
    """Complement the subgraph induced on the neighborhood of vertex i."""
    g._check_vertex(i)
    rows = list(g.adj.rows)
    ri = rows[i - 1]
    m = ri
    while m:
        lsb = m & -m
        k = lsb.bit_length() - 1
        rows[k] ^= ri ^ lsb
        m ^= lsb
    return Graph(BitMatrix(g.n, g.n, tuple(rows)))


def edge_local_complement(g: Graph, e: tuple[int, int]) -> Graph:
    """Pivot on an edge {i,j}.

    The two endpoints swap their outside neighborhoods and stay adjacent;
    an outside pair {k,l} toggles exactly when k and l hang off the edge
    in different ways (only via i, only via j, or via both).
    """
    i, j = e
    g._check_vertex(i)
    g._check_vertex(j)
    if i == j:
        raise NotAnEdgeError(f"({i},{j}) is not an edge: endpoints coincide")
    if not g.has_edge(i, j):
        raise NotAnEdgeError(f"({i},{j}) is not an edge of the graph")
    n = g.n
    bi = 1 << (i - 1)
    bj = 1 << (j - 1)
    mask_out = ((1 << n) - 1) ^ bi ^ bj
    rows = g.adj.rows
    ri_out = rows[i - 1] & mask_out
    rj_out = rows[j - 1] & mask_out
    out = list(rows)
    out[i - 1] = rj_out | bj
    out[j - 1] = ri_out | bi
    m = mask_out
    while m:
        lsb = m & -m
        k = lsb.bit_length() - 1
        m ^= lsb
        row = rows[k] & mask_out
        adj_i = rows[i - 1] >> k & 1
        adj_j = rows[j - 1] >> k & 1
        if adj_i:
            row ^= rj_out
        if adj_j:
            row ^= ri_out
        if adj_j:
            row |= bi
        if adj_i:
            row |= bj
        out[k] = row
    return Graph(BitMatrix(n, n, tuple(out)))


def elc_by_local_complements(g: Graph, e: tuple[int, int]) -> Graph:
    """Reference pivot: complement at i, then j, then i again."""
    i, j = e
    if not g.has_edge(i, j):
        raise NotAnEdgeError(f"({i},{j}) is not an edge of the graph")
    return local_complement(local_complement(local_complement(g, i), j), i)


def twins(g: Graph) -> list[tuple[int, int]]:
    """Adjacent pairs whose neighborhoods agree away from the pair itself.

    Equivalently, pairs whose columns in the adjacency matrix plus the
    identity coincide; adjacency is part of the condition, since the
    columns of non-adjacent look-alike pairs differ in the two diagonal
    positions.  A pair like the two endpoints of a path on three
    vertices (same neighborhood but no edge) does not qualify.
    """
    out = []
    rows = g.adj.rows
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if rows[i] ^ rows[j] == (1 << i) | (1 << j):
                out.append((i + 1, j + 1))
    return out


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or math.inf for forests."""
    n = g.n
    rows = g.adj.rows
    best = math.inf
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
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
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and w > u:
                    # non-tree edge seen once per unordered pair
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def srg_check(g: Graph, n: int, k: int, a: int, c: int) -> bool:
    """Strong-regularity test: degrees and common-neighbor counts.

    Every vertex must have degree k, adjacent pairs must share a common
    neighbors, and distinct non-adjacent pairs must share c.
    """
    if g.n != n:
        return False
    rows = g.adj.rows
    if any(r.bit_count() != k for r in rows):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            common = (rows[i] & rows[j]).bit_count()
            want = a if (rows[i] >> j) & 1 else c
            if common != want:
                return False
    return True


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(BitMatrix.zeros(n, n))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )


def petersen_graph() -> Graph:
    """Outer 5-cycle 1..5, inner 5-cycle 6..10 with step 2, spokes across."""
    edges = []
    for i in range(5):
        edges.append((i + 1, (i + 1) % 5 + 1))
        edges.append((i + 6, (i + 2) % 5 + 6))
        edges.append((i + 1, i + 6))
    return Graph.from_edges(10, edges)


def clebsch_graph() -> Graph:
    """Vertices are the 16 four-bit words; join when they differ in 1 or 4 bits.

    Vertex v corresponds to the word spelling v-1 in binary.  The result is
    strongly regular with parameters (16, 5, 0, 2), which is asserted.
    """
    rows = [0] * 16
    for x in range(16):
        for y in range(x + 1, 16):
            if (x ^ y).bit_count() in (1, 4):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    g = Graph(BitMatrix(16, 16, tuple(rows)))
    assert srg_check(g, 16, 5, 0, 2)
    return g


_GENERATORS_WITH_SIZE = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
}

_FIXED_GENERATORS = {
    "petersen": petersen_graph,
    "clebsch": clebsch_graph,
}


def generate(kind: str, n: int | None = None) -> Graph:
    """Build a named graph; sized families require n, fixed ones reject it."""
    if kind in _GENERATORS_WITH_SIZE:
        if n is None:
            raise ValueError(f"generator '{kind}' needs a size")
        return _GENERATORS_WITH_SIZE[kind](n)
    if kind in _FIXED_GENERATORS:
        if n is not None:
            raise ValueError(f"generator '{kind}' takes no size")
        return _FIXED_GENERATORS[kind]()
    raise ValueError(f"unknown generator '{kind}'")


def _triangle_offsets(n: int) -> list[int]:
    offs = []
    total = 0
    for i in range(n):
        offs.append(total)
        total += n - 1 - i
    return offs


def graph_key(g: Graph) -> int:
    """Upper triangle of the adjacency matrix packed row-major into an int."""
    key = 0
    off = 0
    n = g.n
    for i, r in enumerate(g.adj.rows):
        key |= (r >> (i + 1)) << off
        off += n - 1 - i
    return key


def graph_from_key(n: int, key: int) -> Graph:
    """Inverse of graph_key for a given vertex count."""
    if key < 0 or key >> (n * (n - 1) // 2):
        raise ValueError("key out of range for this vertex count")
    rows = [0] * n
    off = 0
    for i in range(n):
        width = n - 1 - i
        chunk = (key >> off) & ((1 << width) - 1)
        off += width
        rows[i] |= chunk << (i + 1)
        m = chunk
        while m:
            lsb = m & -m
            j = i + 1 + lsb.bit_length() - 1
            rows[j] |= 1 << i
            m ^= lsb
    return Graph(BitMatrix(n, n, tuple(rows)))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in ascending key order."""
    for key in range(1 << (n * (n - 1) // 2)):
        yield graph_from_key(n, key)
