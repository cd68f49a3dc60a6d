"""Catalog instantiation, classification reports, and coverage predicate."""

import pytest

from symbreak import (
    TheoremId,
    TheoremNotApplicableError,
    are_isomorphic,
    classify_graph,
    complete_graph,
    complete_multipartite_graph,
    construction_graph,
    cycle_graph,
    disjoint_union,
    distinguishing_number,
    enumerate_graphs,
    in_family_f,
    instantiate_families,
    metric_dimension,
    parse_expression,
    construct_family,
    path_graph,
)
from symbreak.graphs import GraphError


def catalog_graphs(theorem, n):
    return [inst.graph for inst in instantiate_families(theorem, n)]


def contains_isomorph(pool, g):
    return any(are_isomorphic(g, h) for h in pool)


class TestInstantiation:
    def test_d_n_minus_1_at_order_4(self):
        pool = catalog_graphs(TheoremId.DN1, 4)
        expected = [
            cycle_graph(4),
            complete_multipartite_graph(3, 1),
            disjoint_union(complete_graph(2), complete_graph(2)),
            disjoint_union(complete_graph(3), complete_graph(1)),
        ]
        assert len(pool) == 4
        for g in expected:
            assert contains_isomorph(pool, g)

    def test_d_n_minus_1_at_order_5(self):
        pool = catalog_graphs(TheoremId.DN1, 5)
        assert len(pool) == 2
        assert contains_isomorph(pool, complete_multipartite_graph(4, 1))
        assert contains_isomorph(pool, disjoint_union(complete_graph(4), complete_graph(1)))

    def test_d_n_minus_2_at_order_5_includes_c5_and_split_graph(self):
        pool = catalog_graphs(TheoremId.DN2, 5)
        assert contains_isomorph(pool, cycle_graph(5))
        assert contains_isomorph(pool, construct_family(parse_expression("J(K2,E3)")))

    def test_overlapping_templates_are_merged_with_aliases(self):
        # at order 4 the templates "K2 + empty pair" and "clique + empty pair"
        # both land on the diamond
        for inst in instantiate_families(TheoremId.DN2, 4):
            if are_isomorphic(inst.graph, construct_family(parse_expression("J(K2,E2)"))):
                assert len(inst.matches) >= 2
                entries = {m.entry for m in inst.matches}
                assert {9, 11} <= entries
                break
        else:
            pytest.fail("diamond missing from the order-4 catalog")

    def test_entries_record_parameters(self):
        for inst in instantiate_families(TheoremId.DN1, 6):
            for match in inst.matches:
                assert match.theorem is TheoremId.DN1
                assert match.t == 5
                assert match.expression

    def test_below_minimum_order(self):
        with pytest.raises(TheoremNotApplicableError):
            instantiate_families(TheoremId.DN2, 3)
        with pytest.raises(TheoremNotApplicableError):
            instantiate_families(TheoremId.DN3, 4)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_instances_are_pairwise_non_isomorphic(self, n):
        pool = catalog_graphs(TheoremId.DN2, n)
        for i in range(len(pool)):
            for j in range(i + 1, len(pool)):
                assert not are_isomorphic(pool[i], pool[j])


class TestClassify:
    def test_c4_report(self):
        report = classify_graph(cycle_graph(4))
        assert report.distinguishing == 3 == report.n - 1
        assert (TheoremId.DN1, 1) in {(m.theorem, m.entry) for m in report.matches}

    def test_p4_report(self):
        report = classify_graph(path_graph(4))
        assert report.distinguishing == 2 == report.n - 2
        assert (TheoremId.DN2, 2) in {(m.theorem, m.entry) for m in report.matches}

    def test_p5_report(self):
        report = classify_graph(path_graph(5))
        assert report.distinguishing == 2 == report.n - 3
        assert report.in_family_f
        assert (TheoremId.DN3, 1) in {(m.theorem, m.entry) for m in report.matches}

    def test_disconnected_graph_has_no_dim(self):
        report = classify_graph(disjoint_union(complete_graph(2), complete_graph(2)))
        assert report.dim is None
        assert not report.connected
        assert report.distinguishing == 3

    def test_report_serialises(self):
        payload = classify_graph(cycle_graph(5)).to_dict()
        assert payload["D"] == 3
        assert payload["dim"] == 2
        assert any(m["theorem"] == "Dn2" for m in payload["matches"])


class TestCoveragePredicate:
    def test_p5_is_covered(self):
        assert in_family_f(path_graph(5))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_tiny_graphs_are_covered(self, n):
        for g in enumerate_graphs(n):
            assert in_family_f(g)

    def test_c6_falls_in_the_excluded_region(self):
        # dimension 2 = n - 4, diameter 3, six twin classes
        assert not in_family_f(cycle_graph(6))

    def test_excluded_graphs_exist_at_order_6_and_are_reported(self):
        flagged = [g for g in enumerate_graphs(6) if not in_family_f(g)]
        assert flagged, "the excluded region is non-empty at order 6"


class TestConstruction:
    @pytest.mark.parametrize("a,b", [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    def test_prescribed_invariants(self, a, b):
        g = construction_graph(a, b)
        assert distinguishing_number(g) == a
        assert metric_dimension(g).dim == b

    def test_order_of_the_largest_case(self):
        assert construction_graph(1, 4).n == 16

    def test_rejects_bad_arguments(self):
        with pytest.raises(GraphError):
            construction_graph(2, 2)
        with pytest.raises(GraphError):
            construction_graph(0, 3)
