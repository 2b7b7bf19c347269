"""Recognition of pivot-equivalence and constructive pivot sequences."""

import random

import pytest

from elckit import (
    BitMatrix,
    BitVector,
    ElcSequence,
    Graph,
    NotAnEdgeError,
    NotInDomainError,
    SingularMatrixError,
    VertexSet,
    all_graphs,
    apply_h_blockwise,
    bilinear_check,
    complete_graph,
    decompose_h,
    edge_local_complement,
    elc_orbit,
    elc_sequence_between,
    empty_graph,
    f_double,
    f_transform,
    in_domain,
    inverse,
    invert_via_elc,
    make_h,
    path_graph,
    rank,
    recognize_elc,
    recognize_elc_space,
    replay,
    row_space_key,
    sigma_space,
)


def rand_graph(rng, n, p=0.5):
    edges = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def rand_pivot_chain(rng, g, steps):
    """Apply up to `steps` random pivots, skipping edgeless graphs."""
    cur = g
    for _ in range(steps):
        edges = cur.edges()
        if not edges:
            break
        cur = edge_local_complement(cur, rng.choice(edges))
    return cur


def rand_admissible_set(rng, g):
    """A vertex set whose induced adjacency block is nonsingular."""
    from elckit import principal_submatrix

    while True:
        s = VertexSet(g.n, rng.getrandbits(g.n))
        sub = principal_submatrix(g.adj, s)
        if rank(sub) == sub.nrows:
            return s


class TestElcSequence:
    def test_validation(self):
        ElcSequence(3, ((1, 2), (2, 3)))
        with pytest.raises(ValueError):
            ElcSequence(3, ((1, 4),))
        with pytest.raises(ValueError):
            ElcSequence(3, ((0, 1),))
        with pytest.raises(ValueError):
            ElcSequence(3, ((2, 2),))

    def test_iteration_and_len(self):
        seq = ElcSequence(4, ((1, 2), (3, 4)))
        assert list(seq) == [(1, 2), (3, 4)]
        assert len(seq) == 2


class TestReplay:
    def test_empty_sequence(self):
        g = path_graph(4)
        assert replay(g, ElcSequence(4, ())) == g

    def test_single_pivot(self):
        g = path_graph(3)
        assert replay(g, ElcSequence(3, ((1, 2),))) == edge_local_complement(g, (1, 2))

    def test_illegal_step_raises(self):
        with pytest.raises(NotAnEdgeError):
            replay(path_graph(3), ElcSequence(3, ((1, 3),)))

    def test_sequence_then_reverse_is_identity(self):
        rng = random.Random(71)
        for _ in range(100):
            g = rand_graph(rng, rng.randrange(2, 10))
            forward = []
            cur = g
            for _ in range(rng.randrange(0, 6)):
                edges = cur.edges()
                if not edges:
                    break
                e = rng.choice(edges)
                forward.append(e)
                cur = edge_local_complement(cur, e)
            back = ElcSequence(g.n, tuple(reversed(forward)))
            assert replay(cur, back) == g

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            replay(path_graph(3), ElcSequence(4, ()))


class TestFTransform:
    def test_entrywise_law(self):
        # the transform adds the outer product of column i with
        # (row i + X_ii at position i)
        rng = random.Random(72)
        for _ in range(200):
            n = rng.randrange(1, 7)
            x = BitMatrix.from_row_bits(n, [rng.getrandbits(n) for _ in range(n)])
            i = rng.randrange(1, n + 1)
            y = f_transform(x, i)
            ii = i - 1
            for k in range(n):
                for l in range(n):
                    w = x.entry(ii, l) ^ (x.entry(ii, ii) if l == ii else 0)
                    assert y.entry(k, l) == x.entry(k, l) ^ (x.entry(k, ii) & w)

    def test_double_is_triple_single(self):
        rng = random.Random(73)
        for _ in range(50):
            n = rng.randrange(2, 7)
            x = BitMatrix.from_row_bits(n, [rng.getrandbits(n) for _ in range(n)])
            i = rng.randrange(1, n + 1)
            j = rng.randrange(1, n + 1)
            assert f_double(x, i, j) == f_transform(f_transform(f_transform(x, i), j), i)

    def test_identity_fixed(self):
        eye = BitMatrix.identity(4)
        for i in range(1, 5):
            assert f_transform(eye, i) == eye

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            f_transform(BitMatrix.zeros(2, 3), 1)
        with pytest.raises(ValueError):
            f_transform(BitMatrix.identity(2), 3)


class TestDecomposeH:
    def test_empty_set(self):
        seq = decompose_h(path_graph(3), VertexSet.empty(3))
        assert seq.edges == ()

    def test_single_edge_graph(self):
        seq = decompose_h(complete_graph(2), VertexSet.full(2))
        assert seq.edges == ((1, 2),)

    def test_singular_block_rejected(self):
        # non-adjacent pair induces the zero block
        with pytest.raises(NotInDomainError):
            decompose_h(path_graph(3), VertexSet.from_vertices(3, (1, 3)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            decompose_h(path_graph(3), VertexSet.empty(4))

    def test_edges_pair_up_the_set(self):
        rng = random.Random(74)
        for _ in range(200):
            g = rand_graph(rng, rng.randrange(2, 12))
            s = rand_admissible_set(rng, g)
            seq = decompose_h(g, s)
            used = [v for e in seq.edges for v in e]
            assert len(used) == len(set(used)) == len(s)
            assert set(used) == set(s.members())

    def test_replay_matches_blockwise_image(self):
        rng = random.Random(75)
        for _ in range(1000):
            g = rand_graph(rng, rng.randrange(1, 17))
            s = rand_admissible_set(rng, g)
            seq = decompose_h(g, s)
            assert replay(g, seq) == apply_h_blockwise(s, g)


class TestRecognition:
    def test_same_graph_gives_empty_set(self):
        rng = random.Random(76)
        for _ in range(50):
            g = rand_graph(rng, rng.randrange(1, 10))
            found = recognize_elc(g, g)
            assert found is not None
            assert found.is_empty()

    def test_known_negatives(self):
        assert recognize_elc(path_graph(3), complete_graph(3)) is None
        assert recognize_elc(path_graph(3), empty_graph(3)) is None

    def test_pivot_chain_recognized(self):
        rng = random.Random(77)
        for _ in range(300):
            g = rand_graph(rng, rng.randrange(2, 13))
            g2 = rand_pivot_chain(rng, g, rng.randrange(1, 6))
            found = recognize_elc(g, g2)
            assert found is not None
            assert apply_h_blockwise(found, g) == g2

    def test_exhaustive_against_orbit(self):
        # soundness and completeness on every ordered pair of graphs
        for n in (2, 3, 4):
            orbits = {}
            graphs = list(all_graphs(n))
            for g in graphs:
                for h in graphs:
                    found = recognize_elc(g, h)
                    if g not in orbits:
                        orbits[g] = elc_orbit(g)
                    member = h in orbits[g]
                    assert (found is not None) == member
                    if found is not None:
                        assert apply_h_blockwise(found, g) == h

    def test_solution_space_is_exact(self):
        # every reported solution works; no unreported set does
        rng = random.Random(78)
        for _ in range(100):
            n = rng.randrange(1, 5)
            g = rand_graph(rng, n)
            g2 = rand_pivot_chain(rng, g, 2)
            sol = recognize_elc_space(g, g2)
            assert sol is not None
            reported = {v.bits for v in sol.solutions()}
            for mask in range(1 << n):
                s = VertexSet(n, mask)
                works = bilinear_check(make_h(s), g, g2)
                assert works == (mask in reported)

    def test_homogeneous_part_is_the_stabilizer(self):
        rng = random.Random(79)
        for _ in range(100):
            g = rand_graph(rng, rng.randrange(1, 12))
            sol = recognize_elc_space(g, g)
            sigma = sigma_space(g)
            assert sol.homogeneous.ncols == sigma.dim
            assert row_space_key(sol.homogeneous.transpose()) == sigma.span_key()

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            recognize_elc(path_graph(3), path_graph(4))


class TestSequenceBetween:
    def test_returns_replaying_sequence(self):
        rng = random.Random(81)
        for _ in range(200):
            g = rand_graph(rng, rng.randrange(2, 12))
            g2 = rand_pivot_chain(rng, g, rng.randrange(1, 5))
            seq = elc_sequence_between(g, g2)
            assert seq is not None
            assert replay(g, seq) == g2

    def test_none_for_inequivalent(self):
        assert elc_sequence_between(path_graph(3), complete_graph(3)) is None

    def test_identical_graphs_empty_sequence(self):
        g = path_graph(5)
        seq = elc_sequence_between(g, g)
        assert seq is not None and seq.edges == ()


class TestInvertViaElc:
    def test_single_edge(self):
        seq, inv = invert_via_elc(complete_graph(2))
        assert seq.edges == ((1, 2),)
        assert inv == complete_graph(2)

    def test_singular_rejected(self):
        # odd vertex count makes the adjacency matrix singular
        with pytest.raises(SingularMatrixError):
            invert_via_elc(path_graph(3))
        with pytest.raises(SingularMatrixError):
            invert_via_elc(empty_graph(4))

    def test_random_nonsingular(self):
        rng = random.Random(82)
        done = 0
        while done < 100:
            n = rng.choice((2, 4, 6, 8, 10, 12))
            g = rand_graph(rng, n)
            if rank(g.adj) != n:
                continue
            done += 1
            seq, inv = invert_via_elc(g)
            assert inv.adj == inverse(g.adj)
            assert replay(g, seq) == inv
            used = sorted(v for e in seq.edges for v in e)
            assert used == list(range(1, n + 1))

    def test_inverse_of_inverse(self):
        rng = random.Random(83)
        done = 0
        while done < 30:
            g = rand_graph(rng, 8)
            if rank(g.adj) != 8:
                continue
            done += 1
            _, inv = invert_via_elc(g)
            _, back = invert_via_elc(inv)
            assert back == g
