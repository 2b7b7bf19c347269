"""Explicit closure of graphs under pivoting and local complementation."""

import random

import pytest

from elckit import (
    CapExceededError,
    Graph,
    class_size,
    complete_graph,
    cycle_graph,
    elc_orbit,
    empty_graph,
    graph_from_key,
    graph_key,
    lc_orbit,
    path_graph,
    petersen_graph,
)


def rand_graph(rng, n, p=0.5):
    edges = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def all_graphs(n):
    for key in range(1 << (n * (n - 1) // 2)):
        yield graph_from_key(n, key)


class TestElcOrbit:
    def test_path3(self):
        # the three labeled paths on {1,2,3}; the triangle is NOT reachable
        orbit = elc_orbit(path_graph(3))
        assert orbit.size == 3
        assert {frozenset(h.edges()) for h in orbit.graphs()} == {
            frozenset({(1, 2), (2, 3)}),
            frozenset({(1, 2), (1, 3)}),
            frozenset({(1, 3), (2, 3)}),
        }
        assert complete_graph(3) not in orbit

    def test_singletons(self):
        for g in (empty_graph(1), empty_graph(4), complete_graph(2)):
            orbit = elc_orbit(g)
            assert orbit.size == 1
            assert g in orbit

    def test_known_sizes(self):
        assert elc_orbit(path_graph(4)).size == 5
        assert elc_orbit(cycle_graph(4)).size == 5
        assert elc_orbit(complete_graph(3)).size == 1
        assert elc_orbit(complete_graph(4)).size == 1
        assert elc_orbit(petersen_graph()).size == 216

    def test_source_always_member(self):
        rng = random.Random(120)
        for _ in range(20):
            g = rand_graph(rng, rng.randrange(1, 6))
            assert g in elc_orbit(g)


class TestLcOrbit:
    def test_path3(self):
        # local complementation also reaches the triangle
        orbit = lc_orbit(path_graph(3))
        assert orbit.size == 4
        assert complete_graph(3) in orbit

    def test_contains_elc_orbit(self):
        # a pivot is a composite of three vertex moves
        rng = random.Random(121)
        for _ in range(20):
            g = rand_graph(rng, rng.randrange(1, 6))
            big = lc_orbit(g)
            assert all(h in big for h in elc_orbit(g).graphs())


class TestSizeMatchesFormula:
    def test_exhaustive_small(self):
        for n in range(1, 5):
            for g in all_graphs(n):
                assert elc_orbit(g).size == class_size(g)

    def test_random_n5(self):
        rng = random.Random(122)
        for _ in range(30):
            g = rand_graph(rng, 5)
            assert elc_orbit(g).size == class_size(g)


class TestCap:
    def test_cap_exceeded(self):
        with pytest.raises(CapExceededError) as exc:
            elc_orbit(path_graph(4), cap=3)
        assert exc.value.partial_size == 3
        assert exc.value.cap == 3

    def test_cap_exactly_met_is_fine(self):
        assert elc_orbit(path_graph(4), cap=5).size == 5

    def test_lc_cap(self):
        with pytest.raises(CapExceededError):
            lc_orbit(path_graph(4), cap=2)


class TestOrbitObject:
    def test_contains_wrong_size_graph(self):
        orbit = elc_orbit(path_graph(3))
        assert path_graph(4) not in orbit
        assert empty_graph(3) not in orbit

    def test_graphs_ascending_keys(self):
        orbit = elc_orbit(path_graph(5))
        keys = [graph_key(h) for h in orbit.graphs()]
        assert keys == sorted(keys)
        assert len(set(keys)) == orbit.size

    def test_len_and_metadata(self):
        orbit = elc_orbit(path_graph(4))
        assert len(orbit) == orbit.size == 5
        assert orbit.move == "elc"
        assert orbit.n == 4
        assert lc_orbit(path_graph(4)).move == "lc"

    def test_deterministic(self):
        rng = random.Random(123)
        for _ in range(10):
            g = rand_graph(rng, 5)
            assert elc_orbit(g).keys == elc_orbit(g).keys

    def test_orbit_same_from_any_member(self):
        g = path_graph(4)
        ref = elc_orbit(g).keys
        for h in elc_orbit(g).graphs():
            assert elc_orbit(h).keys == ref
