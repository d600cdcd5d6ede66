import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oddcolor.graphs import (
    Cycle,
    Graph,
    canonical_cycle,
    complete_graph,
    cycle_graph,
    cycle_in,
    enumerate_cycles,
    girth,
    hypothesis_check,
    is_r_relaxed,
    one_subdivision,
    path_graph,
    r_length,
    r_set,
    r_set_from_indices,
)

from oracles import cycles_by_subsets


def small_random_graph(rng, max_n=8):
    n = rng.randint(1, max_n)
    edges = [e for e in combinations(range(n), 2) if rng.random() < 0.4]
    return Graph(n, edges)


class TestGraphBasics:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_parallel_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0)])
        assert g.edges == ((0, 1),)

    def test_edges_sorted(self):
        g = Graph(4, [(3, 2), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))

    def test_adjacency_symmetric(self):
        g = complete_graph(5)
        for u, v in combinations(range(5), 2):
            assert (v in g.adj[u]) == (u in g.adj[v])

    def test_remove_vertex_relabels_densely(self):
        g = cycle_graph(5)
        h, relabel = g.remove_vertex(2)
        assert h.n == 4
        assert relabel == {0: 0, 1: 1, 3: 2, 4: 3}
        assert h.edges == ((0, 1), (0, 3), (2, 3))

    def test_r_set_membership_checked(self):
        g = cycle_graph(4)
        with pytest.raises(ValueError):
            r_set(g, [(0, 2)])
        assert r_set(g, [(1, 0)]) == frozenset({(0, 1)})
        assert r_set_from_indices(g, [0]) == frozenset({(0, 1)})


class TestCycles:
    def test_canonical_under_rotation_reflection(self):
        base = canonical_cycle((0, 1, 2, 3, 4))
        for rot in range(5):
            seq = tuple((i + rot) % 5 for i in range(5))
            assert canonical_cycle(seq) == base
            assert canonical_cycle(tuple(reversed(seq))) == base

    def test_cycle_in_validates_adjacency(self):
        g = cycle_graph(5)
        assert cycle_in(g, (0, 1, 2, 3, 4)).vertices == (0, 1, 2, 3, 4)
        with pytest.raises(ValueError):
            cycle_in(g, (0, 1, 3, 2, 4))
        with pytest.raises(ValueError):
            canonical_cycle((0, 1))
        with pytest.raises(ValueError):
            canonical_cycle((0, 1, 1))


class TestRLength:
    def test_five_cycle_one_marked_edge(self):
        g = cycle_graph(5)
        c = cycle_in(g, range(5))
        assert r_length(c, r_set(g, [(0, 1)])) == 6

    def test_triangle_two_marked_edges(self):
        g = complete_graph(3)
        c = cycle_in(g, (0, 1, 2))
        assert r_length(c, r_set(g, [(0, 1), (1, 2)])) == 5

    def test_square_disjoint_from_r(self):
        g = cycle_graph(4)
        c = cycle_in(g, range(4))
        assert r_length(c, frozenset()) == 4

    def test_lower_bound_with_equality_iff_disjoint(self):
        rng = random.Random(7)
        for _ in range(50):
            g = small_random_graph(rng)
            cycles = enumerate_cycles(g, 6)
            if not cycles or not g.edges:
                continue
            r = frozenset(rng.sample(g.edges, rng.randint(0, len(g.edges))))
            for c in cycles:
                L = r_length(c, r)
                assert L >= len(c.edge_set)
                assert (L == len(c.edge_set)) == (not (c.edge_set & r))


class TestRRelaxed:
    def test_odd_degree_is_relaxed(self):
        g = complete_graph(4)  # 3-regular
        assert all(is_r_relaxed(v, g, frozenset()) for v in range(4))

    def test_even_degree_with_marked_edge(self):
        g = cycle_graph(4)
        assert not is_r_relaxed(0, g, frozenset())
        assert is_r_relaxed(0, g, r_set(g, [(0, 1)]))

    def test_isolated_is_relaxed(self):
        g = Graph(2, [])
        assert is_r_relaxed(0, g, frozenset())

    def test_unknown_vertex_rejected(self):
        with pytest.raises(ValueError):
            is_r_relaxed(5, cycle_graph(4), frozenset())

    def test_monotone_in_r(self):
        rng = random.Random(3)
        for _ in range(40):
            g = small_random_graph(rng)
            if not g.edges:
                continue
            edges = list(g.edges)
            rng.shuffle(edges)
            cut = rng.randint(0, len(edges))
            small = frozenset(edges[: cut // 2])
            big = small | frozenset(edges[:cut])
            for v in range(g.n):
                if is_r_relaxed(v, g, small):
                    assert is_r_relaxed(v, g, big)


class TestEnumerateCycles:
    def test_c5_single_cycle(self):
        assert len(enumerate_cycles(cycle_graph(5), 5)) == 1

    def test_k4_counts(self):
        cycles = enumerate_cycles(complete_graph(4), 4)
        assert sum(1 for c in cycles if len(c) == 3) == 4
        assert sum(1 for c in cycles if len(c) == 4) == 3

    def test_tree_has_none(self):
        assert enumerate_cycles(path_graph(8), 10) == []

    def test_bound_respected(self):
        cycles = enumerate_cycles(complete_graph(5), 3)
        assert all(len(c) == 3 for c in cycles)
        assert len(cycles) == 10

    def test_matches_subset_oracle(self):
        rng = random.Random(11)
        for _ in range(40):
            g = small_random_graph(rng)
            got = {c.vertices for c in enumerate_cycles(g, g.n if g.n >= 3 else 3)}
            assert got == cycles_by_subsets(g, g.n)

    def test_bad_bound_rejected(self):
        with pytest.raises(ValueError):
            enumerate_cycles(cycle_graph(4), 2)


class TestGirth:
    def test_cycles(self):
        assert girth(cycle_graph(7)) == 7
        assert girth(complete_graph(4)) == 3

    def test_forest_infinite(self):
        assert girth(path_graph(4)) is math.inf
        assert girth(Graph(3, [])) is math.inf

    def test_subdivided_k7(self):
        assert girth(one_subdivision(complete_graph(7))) == 6


class TestHypothesisCheck:
    def test_c7_passes(self):
        assert hypothesis_check(cycle_graph(7), frozenset()).passes

    def test_c6_fails_with_witness(self):
        rep = hypothesis_check(cycle_graph(6), frozenset())
        assert not rep.passes
        assert rep.forbidden_cycles[0][1] == 6
        assert len(rep.forbidden_cycles[0][0]) == 6

    def test_two_five_cycles_sharing_one_edge(self):
        # 0-1 shared; 0-1-2-3-4 and 0-1-5-6-7
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                      (1, 5), (5, 6), (6, 7), (0, 7)])
        rep = hypothesis_check(g, frozenset())
        assert not rep.passes
        assert len(rep.five_pairs) == 1
        _, _, shared = rep.five_pairs[0]
        assert shared == (0, 1)
        # the 8-cycle around both has r-length 8: not itself a violation
        assert all(L in (3, 4, 6) for _, L in rep.forbidden_cycles) or not rep.forbidden_cycles

    def test_marking_both_helps(self):
        # same two pentagons: putting the shared edge in R lifts both cycles
        # to r-length 6, which trips the forbidden-length clause instead
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                      (1, 5), (5, 6), (6, 7), (0, 7)])
        rep = hypothesis_check(g, r_set(g, [(0, 1)]))
        assert not rep.passes
        assert rep.five_pairs == ()
        assert {L for _, L in rep.forbidden_cycles} == {6}

    def test_subdivided_k7_rejected(self):
        rep = hypothesis_check(one_subdivision(complete_graph(7)), frozenset())
        assert not rep.passes
        assert any(L == 6 for _, L in rep.forbidden_cycles)

    def test_girth_seven_always_passes(self):
        rng = random.Random(5)
        g = cycle_graph(9)
        for _ in range(20):
            r = frozenset(rng.sample(g.edges, rng.randint(0, 9)))
            assert hypothesis_check(g, r).passes


class TestOneSubdivision:
    def test_triangle_becomes_hexagon(self):
        s = one_subdivision(complete_graph(3))
        assert (s.n, len(s.edges)) == (6, 6)
        assert girth(s) == 6
        assert all(s.degree(v) == 2 for v in range(6))

    def test_k4_counts(self):
        s = one_subdivision(complete_graph(4))
        assert (s.n, len(s.edges)) == (10, 12)

    def test_k7(self):
        s = one_subdivision(complete_graph(7))
        assert (s.n, len(s.edges)) == (28, 42)
        assert girth(s) == 6

    @given(st.integers(3, 7), st.data())
    @settings(max_examples=30, deadline=None)
    def test_bipartite_and_girth_doubles(self, n, data):
        all_edges = list(combinations(range(n), 2))
        chosen = data.draw(st.sets(st.sampled_from(all_edges), min_size=1))
        g = Graph(n, chosen)
        s = one_subdivision(g)
        # bipartition: branch vertices vs subdivision vertices
        assert all(
            (u < g.n) != (v < g.n) for u, v in s.edges
        )
        gi = girth(g)
        if gi is not math.inf:
            assert girth(s) == 2 * gi
        else:
            assert girth(s) is math.inf
