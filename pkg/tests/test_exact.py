from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankred.errors import CapExceeded, InfeasibleError, InputError
from rankred.exact import (
    brute_force_rankred,
    densest_k_exact,
    kcut_solution,
    min_kcut_exact,
    min_t_edge_exact,
    mvc_exact,
    partition_knapsack,
    solve_partition_rankred,
)
from rankred.graphs import BipartiteGraph, Graph, max_matching
from rankred.matroids import GraphicalModel, PartitionModel, TransversalModel

from support import (
    covered,
    induced,
    matching_number,
    max_independent,
    partition_independent,
    random_bipartite,
    random_graph,
)
from test_matroids import partition_models


def _plain_partition_optimum(blocks, k):
    """Smallest X with r(E \\ X) <= r(E) - k, rank by subset enumeration."""
    ground = sorted(e for b, _ in blocks for e in b)
    indep = partition_independent(blocks)
    full = max_independent(ground, indep)
    for r in range(len(ground) + 1):
        for x in combinations(ground, r):
            if max_independent(set(ground) - set(x), indep) <= full - k:
                return r


class TestPartitionSolver:
    BLOCKS = [([0, 1, 2], 2), ([3, 4], 2), ([5, 6, 7, 8], 1)]

    def test_oracle_values(self):
        # frozen below; recomputed here so the expected numbers stay honest
        assert _plain_partition_optimum(self.BLOCKS, 2) == 2
        assert _plain_partition_optimum(self.BLOCKS, 3) == 4

    def test_k2_takes_second_block(self, three_block_model):
        sol = solve_partition_rankred(three_block_model, 2)
        assert sol.size == 2
        assert sol.removed == {3, 4}

    def test_k3(self, three_block_model):
        sol = solve_partition_rankred(three_block_model, 3)
        assert sol.size == 4
        assert partition_knapsack(three_block_model.caps, three_block_model.slacks, 3) == (0, 1)

    def test_full_k_removes_every_capped_block(self, three_block_model):
        sol = solve_partition_rankred(three_block_model, 5)
        assert sol.size == 9
        assert sol.certified_rank_after == 0

    def test_zero_cap_blocks_never_chosen(self):
        m = PartitionModel.from_lists([([0, 1], 0), ([2, 3, 4], 3)])
        assert solve_partition_rankred(m, 3).removed == {2, 3, 4}

    @pytest.mark.parametrize("k", [0, -1])
    def test_k_below_one(self, three_block_model, k):
        with pytest.raises(InputError):
            solve_partition_rankred(three_block_model, k)

    def test_k_above_rank(self, three_block_model):
        with pytest.raises(InfeasibleError):
            solve_partition_rankred(three_block_model, 6)

    def test_knapsack_lexicographic_ties(self):
        # blocks 0 and 1 both reach k=1 at slack 0; the smaller index wins
        assert partition_knapsack([1, 1, 1], [0, 0, 0], 1) == (0,)
        assert partition_knapsack([1, 2, 1], [0, 0, 0], 2) == (0, 1)

    @settings(max_examples=80, deadline=None)
    @given(partition_models(max_elements=10), st.data())
    def test_matches_brute_force(self, m, data):
        if m.full_rank == 0:
            return
        k = data.draw(st.integers(1, m.full_rank))
        dp = solve_partition_rankred(m, k)
        bf = brute_force_rankred(m, k)
        assert dp.size == bf.size
        assert m.rank_after_removal(dp.removed) == dp.certified_rank_after <= m.full_rank - k


class TestBruteForce:
    def test_private_copies_full_removal(self):
        g = BipartiteGraph.from_sizes(3, 3, [(i, 3 + i) for i in range(3)])
        sol = brute_force_rankred(TransversalModel(g), 3)
        assert sol.removed == {0, 1, 2}

    def test_triangle(self):
        sol = brute_force_rankred(GraphicalModel(Graph.complete(3)), 1)
        assert sol.size == 2
        assert sol.removed == {(0, 1), (0, 2)}

    def test_cap(self):
        m = PartitionModel.from_lists([(range(20), 1)])
        with pytest.raises(CapExceeded, match="20"):
            brute_force_rankred(m, 1)

    def test_oracle_input(self, three_block_model):
        sol = brute_force_rankred(three_block_model.oracle(), 2)
        assert sol.size == 2

    @settings(max_examples=60, deadline=None)
    @given(partition_models(max_elements=9), st.data())
    def test_symmetry_reduction_is_exact(self, m, data):
        if m.full_rank == 0:
            return
        k = data.draw(st.integers(1, m.full_rank))
        assert brute_force_rankred(m, k).removed == brute_force_rankred(m, k, use_symmetry=False).removed

    def test_symmetry_reduction_transversal(self, rng):
        for _ in range(15):
            g = random_bipartite(rng, 7, 3, 0.5)
            m = TransversalModel(g)
            for k in range(1, m.full_rank + 1):
                a = brute_force_rankred(m, k)
                b = brute_force_rankred(m, k, use_symmetry=False)
                assert a.removed == b.removed


class TestTEdge:
    def test_triangle(self):
        assert min_t_edge_exact(Graph.complete(3), 1).size == 2
        assert min_t_edge_exact(Graph.complete(3), 3).size == 3

    def test_certificate_has_exactly_t_edges(self):
        res = min_t_edge_exact(Graph.complete(5), 4)
        assert res.size == 4 and len(res.edges) == 4
        assert all(u in res.vertices and v in res.vertices for u, v in res.edges)

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            min_t_edge_exact(Graph.path(3), 3)

    def test_random_against_reverse_enumeration(self, rng):
        for _ in range(20):
            n = rng.randint(2, 9)
            g = random_graph(rng, n, 0.5)
            for t in range(1, g.size + 1):
                # largest-first reverse pass: smallest size j such that some j-set works
                best = min(
                    j for j in range(n, 1, -1)
                    if any(induced(g.edges, c) >= t for c in combinations(reversed(range(n)), j))
                )
                assert min_t_edge_exact(g, t).size == best


class TestDensest:
    def test_k4(self):
        g = Graph.complete(4)
        assert g.induced_edge_count(densest_k_exact(g, 2)) == 1

    def test_star(self):
        g = Graph.star(5)
        assert g.induced_edge_count(densest_k_exact(g, 2)) == 1
        assert g.induced_edge_count(densest_k_exact(g, 5)) == 4

    def test_k_too_large(self):
        with pytest.raises(InputError):
            densest_k_exact(Graph.path(3), 4)

    def test_duality_with_t_edge(self, rng):
        for _ in range(20):
            n = rng.randint(2, 10)
            g = random_graph(rng, n, 0.45)
            for k in range(2, n + 1):
                z = g.induced_edge_count(densest_k_exact(g, k))
                if z:
                    assert min_t_edge_exact(g, z).size <= k

    def test_inverse_monotone(self, rng):
        for _ in range(15):
            g = random_graph(rng, rng.randint(2, 9), 0.5)
            for t in range(1, g.size + 1):
                j = min_t_edge_exact(g, t).size
                assert g.induced_edge_count(densest_k_exact(g, j)) >= t


def _bridge_optimum(g: BipartiteGraph, k: int) -> int:
    """||G|| - min{|F| : mu(G - F) <= k}, by enumerating edge sets F."""
    edges = sorted(g.edges)
    for size in range(len(edges) + 1):
        for f in combinations(edges, size):
            if matching_number(set(edges) - set(f)) <= k:
                return len(edges) - size


class TestMVC:
    def test_star(self):
        assert mvc_exact(Graph.star(5), 1)[1] == 4

    def test_four_cycle(self):
        chosen, count = mvc_exact(Graph.cycle(4), 2)
        assert count == 4
        assert covered(Graph.cycle(4).edges, chosen) == 4

    def test_bipartite_against_edge_deletion(self, rng):
        checked = 0
        while checked < 12:
            g = random_bipartite(rng, rng.randint(1, 7), rng.randint(1, 7), 0.3)
            if len(g.edges) > 10:
                continue
            checked += 1
            mu = len(max_matching(g))
            for k in range(mu + 1):
                assert mvc_exact(g, k)[1] == _bridge_optimum(g, k)


class TestKCut:
    def test_path(self):
        assert len(min_kcut_exact(Graph.path(4), 1)) == 1

    def test_triangle(self):
        assert len(min_kcut_exact(Graph.complete(3), 1)) == 2

    def test_two_triangles(self):
        # emptying one triangle adds two components with three edges
        g = Graph.complete(3).disjoint_union(Graph.complete(3))
        assert len(min_kcut_exact(g, 2)) == 3
        assert len(min_kcut_exact(g, 4)) == 6

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            min_kcut_exact(Graph.path(3), 3)

    def test_solution_certificate(self):
        sol = kcut_solution(Graph.complete(4), 2)
        assert sol.certified_rank_after <= sol.rank_before - 2

    def test_matches_rank_reduction_and_monotone(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 6), 0.6)
            model = GraphicalModel(g)
            prev = 0
            for k in range(1, model.full_rank + 1):
                cut = min_kcut_exact(g, k)
                assert len(cut) == brute_force_rankred(model, k).size
                assert len(cut) >= prev
                prev = len(cut)
