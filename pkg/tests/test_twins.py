"""Twin classes, the quotient graph, almost asymmetry, and the core graph."""

import pytest

from symbreak import (
    are_isomorphic,
    blow_up,
    broom_tree,
    complement,
    complete_graph,
    complete_multipartite_graph,
    core_graph,
    cycle_graph,
    disjoint_union,
    distinguishing_number,
    enumerate_graphs,
    is_almost_asymmetric,
    is_connected,
    join,
    path_graph,
    twin_classes,
    twin_graph,
)
from symbreak.graphs import FamilySpec, construct_family


class TestTwinClasses:
    def test_complete_bipartite_sides(self):
        classes = twin_classes(complete_multipartite_graph(2, 3))
        assert classes == [[0, 1], [2, 3, 4]]

    def test_p4_has_only_singletons(self):
        assert twin_classes(path_graph(4)) == [[0], [1], [2], [3]]

    def test_k4_is_one_class(self):
        assert twin_classes(complete_graph(4)) == [[0, 1, 2, 3]]


class TestTwinGraph:
    def test_unbalanced_bipartite_quotient_is_an_edge(self):
        structure = twin_graph(complete_multipartite_graph(2, 3))
        assert structure.quotient.n == 2
        assert structure.quotient.edge_count == 1
        assert structure.types == ("N", "N")
        assert structure.alpha == 2

    def test_apex_over_clique_plus_isolated(self):
        # one vertex joined to (K_t plus one isolated vertex), t = 3
        spec = FamilySpec.join_of(
            FamilySpec.complete(1),
            FamilySpec.union_of(FamilySpec.complete(3), FamilySpec.complete(1)),
        )
        structure = twin_graph(construct_family(spec))
        assert structure.quotient.n == 3
        assert sorted(structure.types) == ["1", "1", "K"]
        assert structure.alpha == 1

    def test_asymmetric_graph_has_trivial_structure(self):
        structure = twin_graph(broom_tree(3))
        assert structure.quotient.n == broom_tree(3).n
        assert structure.alpha == 0

    def test_diamond_types(self):
        structure = twin_graph(join(complete_graph(2), complement(complete_graph(2))))
        assert sorted(structure.types) == ["K", "N"]
        assert structure.max_class_size() == 2


class TestAlmostAsymmetric:
    def test_c4_rotation_crosses_classes(self):
        assert not is_almost_asymmetric(cycle_graph(4))

    def test_k23_is_almost_asymmetric_with_d_three(self):
        g = complete_multipartite_graph(2, 3)
        assert is_almost_asymmetric(g)
        assert distinguishing_number(g) == 3
        assert twin_graph(g).max_class_size() == 3

    def test_p4_endpoint_swap_crosses_singletons(self):
        assert not is_almost_asymmetric(path_graph(4))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_rule_on_all_small_graphs(self, n):
        for g in enumerate_graphs(n):
            if is_almost_asymmetric(g):
                assert distinguishing_number(g) == twin_graph(g).max_class_size()


class TestRoundTrip:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_blow_up_of_quotient_recovers_graph(self, n):
        for g in enumerate_graphs(n):
            structure = twin_graph(g)
            parts = [
                (len(cls), "complete" if t == "K" else "empty")
                for cls, t in zip(structure.classes, structure.types)
            ]
            rebuilt = blow_up(structure.quotient, parts)
            assert are_isomorphic(rebuilt, g)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_size_bookkeeping(self, n):
        for g in enumerate_graphs(n):
            structure = twin_graph(g)
            sizes = [len(cls) for cls in structure.classes]
            assert sum(sizes) == g.n
            # whenever D equals some class size, the remaining sizes sum to n - D
            d = distinguishing_number(g)
            for i, size in enumerate(sizes):
                if d == size:
                    rest = sum(sizes) - size
                    for m in range(1, g.n + 1):
                        if rest != m:
                            assert d != g.n - m


class TestCoreGraph:
    def test_disconnected_pairs_to_complement(self):
        two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
        assert are_isomorphic(core_graph(two_k2), cycle_graph(4))

    def test_connected_graphs_pass_through(self):
        assert core_graph(cycle_graph(5)) == cycle_graph(5)

    def test_clique_plus_isolated_becomes_a_star(self):
        g = disjoint_union(complete_graph(3), complete_graph(1))
        assert are_isomorphic(core_graph(g), complete_multipartite_graph(3, 1))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_core_is_always_connected(self, n):
        for g in enumerate_graphs(n):
            assert is_connected(core_graph(g))
