"""Integer-exact graph-state amplitudes and local Hadamard action.

A graph defines a sign vector over all 2^n bit strings: the parity of the
number of edges inside the support of the string.  Applying the
unnormalized Hadamard [[1,1],[1,-1]] on a set of vertices is an exact
integer butterfly.  The correspondence checked by ``verify_theorem4``:
the transformed vector matches the sign vector of the blockwise image --
up to scale and a pattern of single-vertex sign flips -- exactly when the
transform's vertex set is admissible for the blockwise pivot operator.

The flip pattern is not decoration.  Hadamards on both endpoints of a
triangle edge send the triangle's sign vector to one that differs from
the triangle's own by a flip at the third vertex, so plain
proportionality fails there even though the set is admissible; allowing
flips at vertices restores an exact if-and-only-if.  In the other
direction nothing is lost: a sign vector times a nontrivial flip pattern
takes the value -1 on some singleton, which no sign vector does, so a
flip-corrected match pins down the image graph uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitVector, VertexSet
from .graph import Graph, all_graphs
from .invariants import TooLargeError
from .lft import apply_h_blockwise, in_domain, make_h

__all__ = [
    "MAX_VERTICES",
    "AmplitudeVector",
    "quadratic_form",
    "amplitudes",
    "apply_local_hadamard",
    "proportional",
    "matches_up_to_flips",
    "verify_theorem4",
]

MAX_VERTICES = 20

# Exhaustive comparison against every graph is reserved for tiny sizes;
# beyond that the shape test (all entries same nonzero magnitude) decides.
_EXHAUSTIVE_LIMIT = 4


@dataclass(frozen=True)
class AmplitudeVector:
    """2^n exact integer amplitudes; vertex 1 is the most significant bit."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise ValueError("amplitude count must be 2^n")
        if not any(self.values):
            raise ValueError("amplitude vector must be nonzero")


def quadratic_form(g: Graph, x: BitVector) -> int:
    """Parity of the number of edges with both endpoints in the support of x."""
    if x.n != g.n:
        raise ValueError("vector and graph size mismatch")
    rows = g.adj.rows
    acc = 0
    m = x.bits
    while m:
        lsb = m & -m
        p = lsb.bit_length() - 1
        m ^= lsb
        acc ^= (rows[p] & x.bits & (lsb - 1)).bit_count()
    return acc & 1


def amplitudes(g: Graph) -> AmplitudeVector:
    """Sign vector (-1)^(edges inside the support) over all index strings.

    Index bit n-v carries vertex v, so vertex 1 is the most significant
    bit of the index.
    """
    n = g.n
    if n > MAX_VERTICES:
        raise TooLargeError(n, MAX_VERTICES)
    radj = [0] * n
    for v in range(1, n + 1):
        m = g.adj.rows[v - 1]
        acc = 0
        while m:
            lsb = m & -m
            u = lsb.bit_length()
            acc |= 1 << (n - u)
            m ^= lsb
        radj[n - v] = acc
    values = []
    for idx in range(1 << n):
        acc = 0
        m = idx
        while m:
            lsb = m & -m
            p = lsb.bit_length() - 1
            m ^= lsb
            acc ^= (radj[p] & idx & (lsb - 1)).bit_count()
        values.append(-1 if acc & 1 else 1)
    return AmplitudeVector(n, tuple(values))


def apply_local_hadamard(v: AmplitudeVector, omega: VertexSet) -> AmplitudeVector:
    """Unnormalized Hadamard butterfly on every vertex in the set."""
    if omega.n != v.n:
        raise ValueError("vertex set and amplitude size mismatch")
    vals = list(v.values)
    size = len(vals)
    for w in omega.members():
        half = 1 << (v.n - w)
        for start in range(0, size, half << 1):
            for i in range(start, start + half):
                lo, hi = vals[i], vals[i + half]
                vals[i] = lo + hi
                vals[i + half] = lo - hi
    return AmplitudeVector(v.n, tuple(vals))


def proportional(u: AmplitudeVector, v: AmplitudeVector) -> bool:
    """Whether u = c*v for some nonzero rational c, by cross-ratios."""
    if u.n != v.n:
        raise ValueError("size mismatch")
    w = next(i for i, val in enumerate(v.values) if val)
    uw = u.values[w]
    if uw == 0:
        return False
    vw = v.values[w]
    return all(ui * vw == uw * vi for ui, vi in zip(u.values, v.values))


def _uniform_sign_shape(v: AmplitudeVector) -> bool:
    mag = abs(v.values[0])
    return mag != 0 and all(abs(val) == mag for val in v.values)


def matches_up_to_flips(u: AmplitudeVector, v: AmplitudeVector) -> bool:
    """Whether u = c*(-1)^(d.x)*v for a nonzero c and a vertex subset d.

    The candidate subset is read off the singleton indices and then
    checked everywhere, so the test is exact.  With d empty this reduces
    to plain proportionality.  The reference v must be nonzero at index
    0 (sign vectors of graphs always are), since the flip pattern is
    anchored there.
    """
    if u.n != v.n:
        raise ValueError("size mismatch")
    if v.values[0] == 0:
        raise ValueError("reference vector must be nonzero at index 0")
    if u.values[0] == 0:
        return False
    cu, cv = u.values[0], v.values[0]
    d = 0
    for bit in range(u.n):
        i = 1 << bit
        if u.values[i] * cv == -cu * v.values[i]:
            d |= i
        elif u.values[i] * cv != cu * v.values[i]:
            return False
    return all(
        ui * cv == (-cu if (idx & d).bit_count() & 1 else cu) * vi
        for idx, (ui, vi) in enumerate(zip(u.values, v.values))
    )


def verify_theorem4(g: Graph, a_set: VertexSet) -> bool:
    """Check the local-Hadamard correspondence for one graph and one set.

    When the set is admissible (induced adjacency block nonsingular) the
    transformed amplitude vector must match the amplitudes of the
    blockwise image up to scale and single-vertex sign flips, and the
    result is that match.  Plain proportionality is not enough: the
    transform generally introduces a flip pattern (on a triangle with
    both endpoints of an edge transformed, the third vertex picks up a
    flip).  When the set is not admissible, the result is whether the
    transformed vector matches ANY graph's amplitudes that way, which
    should come out False -- an inadmissible transform leaves zero
    entries, and flip-corrected sign vectors have none; past the
    exhaustive size limit only the uniform-magnitude shape is tested.
    """
    if a_set.n != g.n:
        raise ValueError("vertex set and graph size mismatch")
    if g.n > MAX_VERTICES:
        raise TooLargeError(g.n, MAX_VERTICES)
    transformed = apply_local_hadamard(amplitudes(g), a_set)
    if in_domain(make_h(a_set), g):
        return matches_up_to_flips(
            transformed, amplitudes(apply_h_blockwise(a_set, g))
        )
    if g.n <= _EXHAUSTIVE_LIMIT:
        return any(
            matches_up_to_flips(transformed, amplitudes(h))
            for h in all_graphs(g.n)
        )
    return _uniform_sign_shape(transformed)
