"""Exact solvers and exhaustive verification for two graph invariants:
metric dimension and distinguishing number.

The package provides bit-row graphs with the usual constructions
(complement, union, join, blow-up, named families), canonical forms and
enumeration of all small graphs up to isomorphism, graph6 I/O, exact
metric-dimension and distinguishing-number solvers, twin-class machinery,
catalogs of the families attaining D in {n, n-1, n-2, n-3}, and a CLI that
verifies everything by brute force at small orders.
"""

from .catalog import (
    ClassificationReport,
    FamilyInstance,
    FamilyMatch,
    TheoremId,
    TheoremNotApplicableError,
    classify_graph,
    construction_graph,
    in_family_f,
    instantiate_families,
)
from .expressions import ExpressionError, format_spec, parse_expression
from .graphs import (
    INFINITY,
    MAX_VERTICES,
    DisconnectedError,
    FamilySpec,
    Graph,
    GraphError,
    OrderLimitError,
    are_twins,
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
from .isomorphism import (
    CanonicalForm,
    Graph6Error,
    are_isomorphic,
    canonical_form,
    enumerate_graphs,
    parse_graph6,
    write_graph6,
)
from .resolving import ResolvingWitness, is_resolving, metric_dimension
from .symmetry import (
    AutomorphismGroup,
    Coloring,
    NotResolvingError,
    automorphism_group,
    coloring_from_resolving_set,
    distinguishing_number,
    is_distinguishing,
    vertex_orbits,
)
from .twins import TwinStructure, core_graph, is_almost_asymmetric, twin_classes, twin_graph
from .verify import (
    Mismatch,
    VerifyReport,
    check_bound,
    check_characterization,
    check_construction,
    enumeration_rows,
    load_graph6_file,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup",
    "CanonicalForm",
    "ClassificationReport",
    "Coloring",
    "DisconnectedError",
    "ExpressionError",
    "FamilyInstance",
    "FamilyMatch",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "INFINITY",
    "MAX_VERTICES",
    "Mismatch",
    "NotResolvingError",
    "OrderLimitError",
    "ResolvingWitness",
    "TheoremId",
    "TheoremNotApplicableError",
    "TwinStructure",
    "VerifyReport",
    "are_isomorphic",
    "are_twins",
    "automorphism_group",
    "blow_up",
    "broom_tree",
    "build_graph",
    "canonical_form",
    "check_bound",
    "check_characterization",
    "check_construction",
    "classify_graph",
    "coloring_from_resolving_set",
    "complement",
    "complete_graph",
    "complete_multipartite_graph",
    "construct_family",
    "construction_graph",
    "core_graph",
    "cycle_graph",
    "diameter",
    "disjoint_union",
    "distinguishing_number",
    "empty_graph",
    "enumerate_graphs",
    "enumeration_rows",
    "format_spec",
    "house_graph",
    "in_family_f",
    "instantiate_families",
    "is_almost_asymmetric",
    "is_connected",
    "is_distinguishing",
    "is_resolving",
    "join",
    "load_graph6_file",
    "metric_dimension",
    "parse_expression",
    "parse_graph6",
    "path_graph",
    "shortest_path_matrix",
    "twin_classes",
    "twin_graph",
    "vertex_orbits",
    "write_graph6",
]
