"""Counting data and structural spaces preserved by pivoting."""

import random

import pytest

from elckit import (
    BitMatrix,
    BitVector,
    Graph,
    SigmaSpace,
    TooLargeError,
    VertexSet,
    all_graphs,
    bineighborhood_space,
    class_size,
    clebsch_graph,
    complete_graph,
    corank_counts,
    cycle_graph,
    delta_count,
    edge_local_complement,
    elc_orbit,
    empty_graph,
    graph_key,
    invariant_report,
    kernel_basis,
    path_graph,
    petersen_graph,
    principal_submatrix,
    rank,
    row_space_key,
    sigma_space,
    twins,
)
from oracles import bineighborhood_span_oracle, rank_oracle


def rand_graph(rng, n, p=0.5):
    edges = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def column_span(m):
    span = {0}
    for k in range(m.ncols):
        c = m.column(k).bits
        span |= {c ^ s for s in span}
    return span


def tilde(g):
    return BitMatrix.from_row_bits(g.n, [g.adj.rows[k] ^ (1 << k) for k in range(g.n)])


class TestCorankCounts:
    def test_empty_pair(self):
        assert corank_counts(empty_graph(2)) == (1, 2, 1)

    def test_single_edge(self):
        assert corank_counts(complete_graph(2)) == (2, 2, 0)

    def test_path3(self):
        assert corank_counts(path_graph(3)) == (3, 4, 1, 0)

    def test_counts_sum_to_subset_total(self):
        rng = random.Random(91)
        for _ in range(50):
            g = rand_graph(rng, rng.randrange(0, 9))
            assert sum(corank_counts(g)) == 1 << g.n

    def test_matches_per_subset_rank(self):
        rng = random.Random(92)
        for _ in range(30):
            g = rand_graph(rng, rng.randrange(0, 7))
            want = [0] * (g.n + 1)
            for mask in range(1 << g.n):
                sub = principal_submatrix(g.adj, VertexSet(g.n, mask))
                want[sub.nrows - rank_oracle(sub) if sub.nrows else 0] += 1
            assert corank_counts(g) == tuple(want)

    def test_cap(self):
        with pytest.raises(TooLargeError):
            corank_counts(empty_graph(5), cap=4)
        assert corank_counts(empty_graph(5), cap=5)[0] == 1
        with pytest.raises(TooLargeError):
            corank_counts(empty_graph(25))  # default cap is 24


class TestDeltaCount:
    def test_known_values(self):
        assert delta_count(empty_graph(3)) == 1
        assert delta_count(complete_graph(2)) == 2
        assert delta_count(path_graph(3)) == 3
        assert delta_count(complete_graph(3)) == 4
        assert delta_count(path_graph(4)) == 5
        assert delta_count(cycle_graph(5)) == 11
        assert delta_count(petersen_graph()) == 216

    def test_even_subsets_only(self):
        # only even-size subsets can induce a nonsingular block
        rng = random.Random(93)
        for _ in range(30):
            g = rand_graph(rng, rng.randrange(1, 8))
            n = g.n
            for mask in range(1 << n):
                if mask.bit_count() & 1:
                    sub = principal_submatrix(g.adj, VertexSet(n, mask))
                    assert rank(sub) < sub.nrows


class TestSigmaSpace:
    def test_known_dimensions(self):
        assert sigma_space(path_graph(3)).dim == 0
        assert sigma_space(complete_graph(2)).dim == 1
        assert sigma_space(complete_graph(3)).dim == 2
        assert sigma_space(complete_graph(4)).dim == 3
        assert sigma_space(petersen_graph()).dim == 0
        assert sigma_space(clebsch_graph()).dim == 1

    def test_complete_graph_space_is_even_weight(self):
        # for K_n the stabilizer is the even-weight subspace
        s = sigma_space(complete_graph(4))
        for v in s.vectors():
            assert v.weight() % 2 == 0
        assert s.contains(BitVector.from_bits((1, 1, 0, 0)))
        assert not s.contains(BitVector.from_bits((1, 0, 0, 0)))

    def test_vectors_annihilate_quadratically(self):
        # (Gamma+I) diag(x) (Gamma+I) = 0 for every basis vector x
        rng = random.Random(94)
        for _ in range(100):
            g = rand_graph(rng, rng.randrange(1, 11))
            t = tilde(g)
            for x in sigma_space(g).vectors():
                rows = [t.rows[k] if x.get(k) else 0 for k in range(g.n)]
                mid = BitMatrix.from_row_bits(g.n, rows)
                assert (t @ mid).is_zero()

    def test_brute_force_membership(self):
        # the space contains exactly the vectors that annihilate
        rng = random.Random(95)
        for _ in range(50):
            n = rng.randrange(1, 6)
            g = rand_graph(rng, n)
            t = tilde(g)
            s = sigma_space(g)
            want = set()
            for mask in range(1 << n):
                rows = [t.rows[k] if (mask >> k) & 1 else 0 for k in range(n)]
                if (t @ BitMatrix.from_row_bits(n, rows)).is_zero():
                    want.add(mask)
            assert column_span(s.basis) == want

    def test_dim_bounded_by_kernel(self):
        rng = random.Random(96)
        for _ in range(100):
            g = rand_graph(rng, rng.randrange(1, 11))
            assert sigma_space(g).dim <= g.n - rank(tilde(g))

    def test_contained_in_kernel_and_nu_perp(self):
        rng = random.Random(97)
        for _ in range(100):
            g = rand_graph(rng, rng.randrange(1, 11))
            t = tilde(g)
            nu = bineighborhood_space(g)
            for x in sigma_space(g).vectors():
                assert t.mat_vec(x).bits == 0
                for k in range(nu.ncols):
                    assert x.dot(nu.column(k)) == 0

    def test_span_key_ignores_basis_choice(self):
        s = sigma_space(complete_graph(3))
        flipped = SigmaSpace(
            3, BitMatrix.from_row_bits(2, [(r << 1 | r >> 1) & 0b11 for r in s.basis.rows])
        )
        # same span written with swapped basis columns
        assert flipped.span_key() == s.span_key()


class TestClassSize:
    def test_known_values(self):
        assert class_size(empty_graph(3)) == 1
        assert class_size(complete_graph(2)) == 1
        assert class_size(complete_graph(3)) == 1
        assert class_size(complete_graph(4)) == 1
        assert class_size(path_graph(3)) == 3
        assert class_size(path_graph(4)) == 5
        assert class_size(path_graph(5)) == 8
        assert class_size(cycle_graph(4)) == 5
        assert class_size(cycle_graph(5)) == 11
        assert class_size(Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])) == 4
        assert class_size(petersen_graph()) == 216

    def test_matches_orbit_random(self):
        rng = random.Random(98)
        for _ in range(60):
            g = rand_graph(rng, rng.randrange(1, 6))
            assert class_size(g) == elc_orbit(g).size

    def test_orbit_members_share_the_count(self):
        rng = random.Random(99)
        for _ in range(20):
            g = rand_graph(rng, 5)
            orb = elc_orbit(g)
            for h in orb.graphs():
                assert class_size(h) == orb.size


class TestBineighborhood:
    def test_matches_cycle_and_nonedge_oracle(self):
        rng = random.Random(101)
        for _ in range(120):
            g = rand_graph(rng, rng.randrange(1, 8))
            assert column_span(bineighborhood_space(g)) == bineighborhood_span_oracle(g)

    def test_empty_graph_trivial(self):
        assert bineighborhood_space(empty_graph(4)).ncols == 0

    def test_petersen(self):
        # girth 5 kills every common neighborhood of a cycle or non-edge pair
        nu = bineighborhood_space(petersen_graph())
        # non-adjacent vertices in the Petersen graph share exactly one
        # neighbor, so the space is far from trivial
        assert nu.ncols == 10


class TestInvariantReport:
    def test_fields_consistent(self):
        rng = random.Random(102)
        for _ in range(50):
            g = rand_graph(rng, rng.randrange(1, 10))
            rep = invariant_report(g)
            assert rep.n == g.n
            assert rep.rank_gamma_plus_i + rep.kernel.ncols == g.n
            assert rep.sigma_dim == sigma_space(g).dim
            assert rep.twin_pairs == tuple(twins(g))
            assert rep.delta_count == delta_count(g)
            assert rep.class_size == class_size(g)

    def test_cap_suppresses_enumeration(self):
        rep = invariant_report(path_graph(5), cap=4)
        assert rep.delta_count is None and rep.class_size is None
        assert rep.sigma_dim == 0  # still computed

    def test_orthogonal_iff_all_ones_stabilizes(self):
        rng = random.Random(103)
        for _ in range(100):
            g = rand_graph(rng, rng.randrange(1, 10))
            rep = invariant_report(g)
            ones = BitVector(g.n, (1 << g.n) - 1)
            assert rep.orthogonal == sigma_space(g).contains(ones)

    def test_single_edge_orthogonal(self):
        assert invariant_report(complete_graph(2)).orthogonal
        assert not invariant_report(path_graph(4)).orthogonal


class TestInvarianceUnderPivot:
    def test_all_invariants_preserved(self):
        rng = random.Random(104)
        done = 0
        while done < 100:
            g = rand_graph(rng, rng.randrange(2, 11))
            edges = g.edges()
            if not edges:
                continue
            done += 1
            h = edge_local_complement(g, rng.choice(edges))
            assert sigma_space(h).span_key() == sigma_space(g).span_key()
            assert row_space_key(kernel_basis(tilde(h)).transpose()) == row_space_key(
                kernel_basis(tilde(g)).transpose()
            )
            assert twins(h) == twins(g)
            assert delta_count(h) == delta_count(g)
            assert invariant_report(h).orthogonal == invariant_report(g).orthogonal

    def test_delta_constant_across_whole_orbit(self):
        rng = random.Random(105)
        for _ in range(20):
            g = rand_graph(rng, 5)
            d = delta_count(g)
            for h in elc_orbit(g).graphs():
                assert delta_count(h) == d
