"""The interlace polynomial of a graph, computed by subset enumeration.

The polynomial in the shifted basis is sum over vertex subsets of
(x-1)^corank, where corank is taken of the induced adjacency block over
GF(2).  Both the shifted counts and the monomial coefficients are kept;
all arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .graph import Graph, twins
from .invariants import corank_counts, sigma_space

__all__ = [
    "InterlacePoly",
    "interlace_poly",
    "evaluate",
    "DivisibilityResult",
    "divisibility_check",
    "EvennessCondition",
    "evenness_sufficient",
    "format_poly",
]


@dataclass(frozen=True)
class InterlacePoly:
    """Interlace polynomial in two bases.

    ``b[k]`` counts vertex subsets of corank k (coefficients on (x-1)^k),
    ``a[i]`` are the monomial coefficients on x^i.  Construction checks
    that the bases agree and that the counts cover all 2**n subsets.
    """

    b: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.b) - 1
        if n < 0:
            raise ValueError("empty coefficient list")
        if len(self.a) != len(self.b):
            raise ValueError("basis length mismatch")
        if sum(self.b) != 1 << n:
            raise ValueError("subset counts do not sum to 2^n")
        if self.a != _shifted_to_monomial(self.b):
            raise ValueError("monomial coefficients inconsistent with counts")

    @property
    def n(self) -> int:
        return len(self.b) - 1

    @property
    def degree(self) -> int:
        for i in range(len(self.a) - 1, -1, -1):
            if self.a[i]:
                return i
        return 0

    @classmethod
    def from_corank_counts(cls, counts: Sequence[int]) -> InterlacePoly:
        b = tuple(counts)
        return cls(b, _shifted_to_monomial(b))

    def evaluate(self, x: int) -> int:
        return sum(bk * (x - 1) ** k for k, bk in enumerate(self.b))


def _shifted_to_monomial(b: Sequence[int]) -> tuple[int, ...]:
    """Expand sum b_k (x-1)^k into monomial coefficients."""
    n = len(b) - 1
    return tuple(
        sum((-1) ** (i + k) * math.comb(k, i) * b[k] for k in range(i, n + 1))
        for i in range(n + 1)
    )


def interlace_poly(g: Graph, cap: int | None = None) -> InterlacePoly:
    """Interlace polynomial via the shared subset walker."""
    return InterlacePoly.from_corank_counts(corank_counts(g, cap))


def evaluate(p: InterlacePoly, x: int) -> int:
    return p.evaluate(x)


class DivisibilityResult(NamedTuple):
    sigma_size: int
    all_divisible: bool


def divisibility_check(g: Graph, cap: int | None = None) -> DivisibilityResult:
    """Whether the stabilizer size divides every monomial coefficient."""
    size = 1 << sigma_space(g).dim
    p = interlace_poly(g, cap)
    return DivisibilityResult(size, all(ai % size == 0 for ai in p.a))


class EvennessCondition(Enum):
    """Cheap structural reasons for all monomial coefficients to be even."""

    TWINS = "twins"
    ODD_DEGREE_EVEN_INTERSECTIONS = "odd_degree_even_intersections"
    NONE = "none"


def evenness_sufficient(g: Graph) -> EvennessCondition:
    """Detect either sufficient condition, checking twins first.

    Twins force a nontrivial stabilizer directly.  Failing that, all
    degrees odd with every distinct pair sharing an even number of
    neighbors makes the all-ones vector a stabilizer element.
    """
    if twins(g):
        return EvennessCondition.TWINS
    rows = g.adj.rows
    if all(r.bit_count() & 1 for r in rows) and all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(g.n)
        for j in range(i + 1, g.n)
    ):
        return EvennessCondition.ODD_DEGREE_EVEN_INTERSECTIONS
    return EvennessCondition.NONE


def format_poly(p: InterlacePoly) -> str:
    """Monomial-basis pretty form, descending powers, e.g. 'x^2 + 2x'."""
    terms = []
    for i in range(len(p.a) - 1, -1, -1):
        coeff = p.a[i]
        if coeff == 0:
            continue
        mag = abs(coeff)
        if i == 0:
            body = str(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        terms.append(("-" if coeff < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
