"""Equivalence classes by explicit closure under moves.

Breadth-first closure over pivot moves (or single-vertex complementations)
with a hard cap on the number of labeled graphs visited.  This is the
ground truth the counting formula and the recognizer are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, edge_local_complement, graph_from_key, graph_key, local_complement

__all__ = ["CapExceededError", "GraphOrbit", "elc_orbit", "lc_orbit"]

DEFAULT_ORBIT_CAP = 10**6


class CapExceededError(RuntimeError):
    """Closure grew past the cap; carries the partial size found so far."""

    def __init__(self, partial_size: int, cap: int):
        self.partial_size = partial_size
        self.cap = cap
        super().__init__(f"orbit exceeds cap {cap} (found {partial_size} so far)")


@dataclass(frozen=True)
class GraphOrbit:
    """A complete equivalence class of labeled graphs, stored as keys."""

    source: Graph
    move: str
    keys: frozenset[int]

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def size(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, g: Graph) -> bool:
        return g.n == self.source.n and graph_key(g) in self.keys

    def graphs(self) -> Iterator[Graph]:
        """Members in ascending key order."""
        for key in sorted(self.keys):
            yield graph_from_key(self.source.n, key)


def _closure(
    g: Graph, move: str, step: Callable[[Graph], list[Graph]], cap: int
) -> GraphOrbit:
    seen = {graph_key(g)}
    frontier = [g]
    while frontier:
        frontier.sort(key=graph_key)
        nxt = []
        for cur in frontier:
            for moved in step(cur):
                key = graph_key(moved)
                if key not in seen:
                    if len(seen) >= cap:
                        raise CapExceededError(len(seen), cap)
                    seen.add(key)
                    nxt.append(moved)
        frontier = nxt
    return GraphOrbit(g, move, frozenset(seen))


def elc_orbit(g: Graph, cap: int = DEFAULT_ORBIT_CAP) -> GraphOrbit:
    """All labeled graphs reachable by pivoting."""
    return _closure(
        g, "elc", lambda cur: [edge_local_complement(cur, e) for e in cur.edges()], cap
    )


def lc_orbit(g: Graph, cap: int = DEFAULT_ORBIT_CAP) -> GraphOrbit:
    """All labeled graphs reachable by local complementation at vertices."""
    return _closure(
        g,
        "lc",
        lambda cur: [local_complement(cur, i) for i in cur.vertices()],
        cap,
    )
