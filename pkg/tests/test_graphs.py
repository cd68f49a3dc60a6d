"""Graph construction, algebra, families, and distances."""

import math

import pytest
from hypothesis import given, settings

from symbreak import (
    FamilySpec,
    Graph,
    GraphError,
    are_isomorphic,
    blow_up,
    broom_tree,
    build_graph,
    complement,
    complete_graph,
    complete_multipartite_graph,
    construct_family,
    cycle_graph,
    diameter,
    disjoint_union,
    empty_graph,
    house_graph,
    is_connected,
    join,
    path_graph,
    shortest_path_matrix,
)
from symbreak.graphs import DisconnectedError

from conftest import graphs


class TestBuildGraph:
    def test_path_p4(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert g.degree_sequence() == (1, 1, 2, 2)

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.edge_count == 0

    def test_cycle_c4(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.degree_sequence() == (2, 2, 2, 2)
        assert is_connected(g)

    def test_duplicate_and_reversed_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(GraphError):
            build_graph(3, [(0, 3)])

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            build_graph(3, [(1, 1)])

    def test_rejects_order_above_cap(self):
        with pytest.raises(GraphError):
            build_graph(65, [])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0b00))


class TestAlgebra:
    def test_complement_of_complete_is_empty(self):
        assert complement(complete_graph(4)).edge_count == 0

    def test_c5_is_self_complementary(self):
        c5 = cycle_graph(5)
        assert are_isomorphic(c5, complement(c5))

    def test_complement_of_2k2_is_c4(self):
        two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
        assert are_isomorphic(complement(two_k2), cycle_graph(4))

    def test_union_k2_k2(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        assert g.n == 4 and g.edges() == [(0, 1), (2, 3)]

    def test_union_k3_k1_has_isolated_vertex(self):
        g = disjoint_union(complete_graph(3), complete_graph(1))
        assert g.degree(3) == 0 and g.n == 4

    def test_union_of_singletons_is_empty(self):
        g = disjoint_union(complete_graph(1), complete_graph(1))
        assert g.edge_count == 0 and g.n == 2

    def test_join_k1_p4_order(self):
        g = join(complete_graph(1), path_graph(4))
        assert g.n == 5 and g.degree(0) == 4

    def test_join_of_empty_parts_is_complete_bipartite(self):
        g = join(empty_graph(2), empty_graph(2))
        assert are_isomorphic(g, cycle_graph(4))
        assert are_isomorphic(g, complete_multipartite_graph(2, 2))

    def test_join_k2_empty2_is_k4_minus_edge(self):
        g = join(complete_graph(2), empty_graph(2))
        assert g.edge_count == 5 and g.n == 4
        assert not g.has_edge(2, 3)

    def test_union_order_overflow(self):
        with pytest.raises(GraphError):
            disjoint_union(empty_graph(40), empty_graph(40))


class TestBlowUp:
    def test_unit_blow_up_is_identity(self):
        p4 = path_graph(4)
        assert blow_up(p4, [(1, "complete")] * 4) == p4

    def test_path_with_doubled_inner_vertex(self):
        g = blow_up(path_graph(4), [(1, "complete"), (2, "complete"), (1, "complete"), (1, "complete")])
        assert g.n == 5
        # the doubled part is a clique pair adjacent to both path neighbours
        assert g.has_edge(1, 2)
        assert g.has_edge(0, 1) and g.has_edge(0, 2) and g.has_edge(1, 3) and g.has_edge(2, 3)

    def test_path_with_independent_end_pair(self):
        g = blow_up(path_graph(4), [(2, "empty"), (1, "complete"), (1, "complete"), (1, "complete")])
        assert g.n == 5
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 2) and g.has_edge(1, 2)

    def test_arity_mismatch(self):
        with pytest.raises(GraphError):
            blow_up(path_graph(4), [(1, "complete")] * 3)

    def test_bad_kind(self):
        with pytest.raises(GraphError):
            blow_up(path_graph(2), [(1, "complete"), (1, "sparse")])

    @given(graphs(min_n=1, max_n=6))
    @settings(max_examples=60)
    def test_unit_blow_up_identity_property(self, g):
        assert blow_up(g, [(1, "empty")] * g.n) == g


class TestFamilies:
    def test_broom_tree_structure(self):
        for k in range(3, 7):
            tree = broom_tree(k)
            assert tree.n == 1 + k * (k + 1) // 2
            assert tree.degree(0) == k
            leaves = [v for v in range(tree.n) if tree.degree(v) == 1]
            assert len(leaves) == k
            dist = shortest_path_matrix(tree)
            assert sorted(dist[0][leaf] for leaf in leaves) == list(range(1, k + 1))
            assert all(tree.degree(v) in (1, 2) for v in range(1, tree.n))

    def test_broom_tree_rejects_small_k(self):
        with pytest.raises(GraphError):
            broom_tree(2)

    def test_complete_bipartite_3_3(self):
        g = complete_multipartite_graph(3, 3)
        assert g.n == 6 and g.edge_count == 9
        assert g.degree_sequence() == (3,) * 6

    def test_house_is_chorded_5_cycle(self):
        g = house_graph()
        assert g.n == 5 and g.edge_count == 6
        assert g.degree_sequence() == (2, 2, 2, 3, 3)
        assert diameter(g) == 2

    def test_construct_family_tree_expressions(self):
        spec = FamilySpec.join_of(
            FamilySpec.complete(1),
            FamilySpec.union_of(FamilySpec.complete(2), FamilySpec.complete(1)),
        )
        g = construct_family(spec)
        assert g.n == 4 and g.degree(0) == 3

    def test_construct_family_rejects_bad_parameters(self):
        with pytest.raises(GraphError):
            construct_family(FamilySpec.cycle(2))
        with pytest.raises(GraphError):
            construct_family(FamilySpec.broom(1))


class TestDistances:
    def test_p4_end_to_end_distance(self):
        dist = shortest_path_matrix(path_graph(4))
        assert dist[0][3] == 3

    def test_cross_component_distance_is_infinite(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        dist = shortest_path_matrix(g)
        assert dist[0][2] == math.inf

    def test_c5_distances(self):
        dist = shortest_path_matrix(cycle_graph(5))
        off_diagonal = {dist[u][v] for u in range(5) for v in range(5) if u != v}
        assert off_diagonal == {1, 2}
        assert diameter(cycle_graph(5)) == 2

    def test_diameter_values(self):
        assert diameter(complete_graph(5)) == 1
        assert diameter(path_graph(5)) == 4

    def test_diameter_rejects_disconnected(self):
        with pytest.raises(DisconnectedError):
            diameter(disjoint_union(complete_graph(2), complete_graph(2)))

    def test_connectivity(self):
        assert is_connected(path_graph(6))
        assert not is_connected(disjoint_union(complete_graph(1), complete_graph(3)))
        assert is_connected(complete_graph(1))


@given(graphs(max_n=7))
@settings(max_examples=80)
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs(min_n=0, max_n=4), graphs(min_n=0, max_n=4))
@settings(max_examples=60)
def test_join_is_complement_of_union_of_complements(g, h):
    direct = join(g, h)
    dual = complement(disjoint_union(complement(g), complement(h)))
    assert direct == dual


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=60)
def test_distance_matrix_shape_properties(g):
    dist = shortest_path_matrix(g)
    n = g.n
    for u in range(n):
        assert dist[u][u] == 0
        for v in range(n):
            assert dist[u][v] == dist[v][u]
            for w in range(n):
                if dist[u][v] < math.inf and dist[v][w] < math.inf:
                    assert dist[u][w] <= dist[u][v] + dist[v][w]
