"""Catalogs of the graph families attaining each large distinguishing value.

Four catalogs are bundled, one per characterised value of the
distinguishing number D on graphs of order n:

* ``Dn``   D = n      complete and empty graphs
* ``Dn1``  D = n - 1  four families
* ``Dn2``  D = n - 2  fourteen families
* ``Dn3``  D = n - 3  forty-two families, valid outside one excluded
  parameter region (see :func:`in_family_f`)

Instantiation enumerates every parameter value of every template that lands
on a requested order, keeps one representative per isomorphism class, and
records all (entry, parameter) aliases that produced it.  Membership
questions are answered by isomorphism against these concrete instances, so
there is a single matching mechanism and no per-family recognition code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from .expressions import format_spec
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    broom_tree,
    build_graph,
    construct_family,
    diameter,
    is_connected,
)
from .isomorphism import (
    CANONICAL_MAX_VERTICES,
    CanonicalForm,
    canonical_form,
    write_graph6,
)
from .resolving import metric_dimension
from .symmetry import distinguishing_number
from .twins import core_graph, twin_graph


class TheoremId(enum.Enum):
    """Identifier of one bundled characterisation catalog."""

    DN = "Dn"
    DN1 = "Dn1"
    DN2 = "Dn2"
    DN3 = "Dn3"

    @property
    def offset(self) -> int:
        """The catalog covers graphs with D = n - offset."""
        return _THEOREMS[self].offset

    @property
    def min_order(self) -> int:
        return _THEOREMS[self].min_order


class TheoremNotApplicableError(GraphError):
    """The requested order is below the catalog's range."""


class FamilyEntry(NamedTuple):
    index: int
    t_min: int | None  # None marks a parameter-free entry
    make: Callable[[int], FamilySpec]


class FamilyMatch(NamedTuple):
    theorem: TheoremId
    entry: int
    t: int | None
    expression: str


@dataclass(frozen=True)
class FamilyInstance:
    """One concrete catalog graph with every alias that produced it."""

    graph: Graph
    canonical: CanonicalForm
    matches: tuple[FamilyMatch, ...]


K = FamilySpec.complete
E = FamilySpec.empty
P = FamilySpec.path
C = FamilySpec.cycle
B = FamilySpec.bipartite
M = FamilySpec.multipartite
U = FamilySpec.union_of
J = FamilySpec.join_of
BU = FamilySpec.blow
HOUSE = FamilySpec.house()


def _const(spec: FamilySpec) -> Callable[[int], FamilySpec]:
    return lambda _t: spec


@dataclass(frozen=True)
class _Theorem:
    offset: int
    min_order: int
    entries: tuple[FamilyEntry, ...]


_THEOREMS: dict[TheoremId, _Theorem] = {
    TheoremId.DN: _Theorem(
        offset=0,
        min_order=1,
        entries=(
            FamilyEntry(1, 1, lambda t: K(t)),
            FamilyEntry(2, 1, lambda t: E(t)),
        ),
    ),
    TheoremId.DN1: _Theorem(
        offset=1,
        min_order=1,
        entries=(
            FamilyEntry(1, None, _const(C(4))),
            FamilyEntry(2, 2, lambda t: B(t, 1)),
            FamilyEntry(3, None, _const(U(K(2), K(2)))),
            FamilyEntry(4, 2, lambda t: U(K(t), K(1))),
        ),
    ),
    TheoremId.DN2: _Theorem(
        offset=2,
        min_order=4,
        entries=(
            FamilyEntry(1, None, _const(C(5))),
            FamilyEntry(2, None, _const(P(4))),
            FamilyEntry(3, None, _const(M(1, 2, 2))),
            FamilyEntry(4, None, _const(U(K(2), K(2), K(1)))),
            FamilyEntry(5, None, _const(B(3, 3))),
            FamilyEntry(6, None, _const(U(K(3), K(3)))),
            FamilyEntry(7, 3, lambda t: B(t, 2)),
            FamilyEntry(8, 3, lambda t: U(K(t), K(2))),
            FamilyEntry(9, 2, lambda t: J(K(2), E(t))),
            FamilyEntry(10, 2, lambda t: U(K(t), E(2))),
            FamilyEntry(11, 2, lambda t: J(K(t), E(2))),
            FamilyEntry(12, 2, lambda t: U(E(t), K(2))),
            FamilyEntry(13, 2, lambda t: J(K(1), U(K(t), K(1)))),
            FamilyEntry(14, 2, lambda t: U(B(t, 1), K(1))),
        ),
    ),
    TheoremId.DN3: _Theorem(
        offset=3,
        min_order=5,
        entries=(
            FamilyEntry(1, None, _const(P(5))),
            FamilyEntry(2, None, _const(HOUSE)),
            FamilyEntry(3, None, _const(B(4, 4))),
            FamilyEntry(4, None, _const(U(K(4), K(4)))),
            FamilyEntry(5, 3, lambda t: J(K(3), E(t))),
            FamilyEntry(6, 3, lambda t: U(E(3), K(t))),
            FamilyEntry(7, 2, lambda t: J(K(2), U(K(t), K(1)))),
            FamilyEntry(8, 2, lambda t: U(E(2), B(t, 1))),
            FamilyEntry(9, 4, lambda t: B(t, 3)),
            FamilyEntry(10, 4, lambda t: U(K(t), K(3))),
            FamilyEntry(11, 3, lambda t: J(K(t), E(3))),
            FamilyEntry(12, 3, lambda t: U(E(t), K(3))),
            FamilyEntry(13, 2, lambda t: J(K(t), U(K(2), K(1)))),
            FamilyEntry(14, 2, lambda t: U(E(t), B(2, 1))),
            FamilyEntry(15, 3, lambda t: M(1, 2, t)),
            FamilyEntry(16, 3, lambda t: U(K(1), K(2), K(t))),
            FamilyEntry(17, None, _const(J(K(2), B(2, 2)))),
            FamilyEntry(18, None, _const(U(E(2), K(2), K(2)))),
            FamilyEntry(19, None, _const(M(1, 3, 3))),
            FamilyEntry(20, None, _const(U(K(3), K(3), K(1)))),
            FamilyEntry(21, None, _const(M(2, 2, 2))),
            FamilyEntry(22, None, _const(U(K(2), K(2), K(2)))),
            FamilyEntry(23, 2, lambda t: J(E(2), U(K(1), K(t)))),
            FamilyEntry(24, 2, lambda t: U(K(2), B(t, 1))),
            FamilyEntry(25, None, _const(J(E(2), U(K(2), K(2))))),
            FamilyEntry(26, None, _const(U(K(2), B(2, 2)))),
            FamilyEntry(27, 2, lambda t: J(E(t), U(K(1), K(2)))),
            FamilyEntry(28, 2, lambda t: U(K(t), B(2, 1))),
            FamilyEntry(29, None, _const(J(K(2), U(K(2), K(2))))),
            FamilyEntry(30, None, _const(U(E(2), B(2, 2)))),
            FamilyEntry(31, 2, lambda t: J(K(1), U(K(1), B(1, t)))),
            FamilyEntry(32, 2, lambda t: U(K(1), J(K(1), U(K(t), K(1))))),
            FamilyEntry(33, None, _const(J(K(1), P(4)))),
            FamilyEntry(34, None, _const(U(K(1), P(4)))),
            FamilyEntry(35, None, _const(J(K(1), U(K(1), K(2), K(2))))),
            FamilyEntry(36, None, _const(U(K(1), J(K(1), B(2, 2))))),
            FamilyEntry(37, None, _const(J(K(1), U(K(1), B(2, 2))))),
            FamilyEntry(38, None, _const(U(K(1), J(K(1), U(K(2), K(2)))))),
            FamilyEntry(39, 2, lambda t: BU(P(4), (1, "complete"), (t, "complete"), (1, "complete"), (1, "complete"))),
            FamilyEntry(40, 2, lambda t: BU(P(4), (t, "empty"), (1, "complete"), (1, "complete"), (1, "complete"))),
            FamilyEntry(41, 2, lambda t: BU(P(4), (1, "complete"), (t, "empty"), (1, "complete"), (1, "complete"))),
            FamilyEntry(42, 2, lambda t: BU(P(4), (t, "complete"), (1, "complete"), (1, "complete"), (1, "complete"))),
        ),
    ),
}


@lru_cache(maxsize=None)
def instantiate_families(theorem: TheoremId, n: int) -> tuple[FamilyInstance, ...]:
    """All catalog graphs of order exactly ``n``, deduplicated.

    Every (entry, parameter) assignment reaching order ``n`` is generated;
    isomorphic outcomes are merged, keeping all aliases.  Results are sorted
    by canonical form.

    Raises:
        TheoremNotApplicableError: below the catalog's minimum order.
    """
    spec = _THEOREMS[theorem]
    if n < spec.min_order:
        raise TheoremNotApplicableError(
            f"{theorem.value} applies to orders >= {spec.min_order}, got {n}"
        )
    by_canon: dict[tuple[int, int], tuple[Graph, CanonicalForm, list[FamilyMatch]]] = {}
    for entry in spec.entries:
        if entry.t_min is None:
            assignments: list[int | None] = [None]
        else:
            assignments = list(range(entry.t_min, n + 1))
        for t in assignments:
            family = entry.make(0 if t is None else t)
            graph = construct_family(family)
            if graph.n != n:
                continue
            canon = canonical_form(graph)
            match = FamilyMatch(theorem, entry.index, t, format_spec(family))
            key = (canon.n, canon.value)
            if key in by_canon:
                by_canon[key][2].append(match)
            else:
                by_canon[key] = (graph, canon, [match])
    instances = [
        FamilyInstance(graph, canon, tuple(matches))
        for graph, canon, matches in by_canon.values()
    ]
    instances.sort(key=lambda inst: inst.canonical.value)
    return tuple(instances)


def applicable_theorems(n: int) -> list[TheoremId]:
    return [tid for tid in TheoremId if n >= _THEOREMS[tid].min_order]


def in_family_f(g: Graph) -> bool:
    """Whether the order-(n-3) catalog's coverage applies to ``g``.

    The catalog leaves open exactly the graphs whose connected core has
    metric dimension n - 4, diameter 2 or 3, and a twin quotient on 5 to 9
    vertices; for those this predicate is False and the catalog makes no
    claim either way.
    """
    core = core_graph(g)
    if metric_dimension(core).dim != g.n - 4:
        return True
    if diameter(core) not in (2, 3):
        return True
    return not 5 <= twin_graph(core).quotient.n <= 9


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the analyzer reports about a single graph."""

    graph6: str
    n: int
    connected: bool
    dim: int | None
    distinguishing: int
    core_diameter: int
    core_twin_order: int
    in_family_f: bool
    matches: tuple[FamilyMatch, ...]

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "connected": self.connected,
            "dim": self.dim,
            "D": self.distinguishing,
            "core_diameter": self.core_diameter,
            "core_twin_order": self.core_twin_order,
            "in_family_F": self.in_family_f,
            "matches": [
                {
                    "theorem": m.theorem.value,
                    "entry": m.entry,
                    "t": m.t,
                    "family": m.expression,
                }
                for m in self.matches
            ],
        }


def classify_graph(g: Graph) -> ClassificationReport:
    """Compute the invariants of ``g`` and match it against every catalog.

    Matching is by isomorphism against the instantiated catalog graphs of
    the same order, never by structural pattern recognition.
    """
    if g.n < 1:
        raise GraphError("classification needs at least one vertex")
    connected = is_connected(g)
    dim = metric_dimension(g).dim if connected else None
    dval = distinguishing_number(g)
    core = core_graph(g)
    matches: list[FamilyMatch] = []
    if g.n <= CANONICAL_MAX_VERTICES:
        canon = canonical_form(g)
        for tid in applicable_theorems(g.n):
            for instance in instantiate_families(tid, g.n):
                if instance.canonical == canon:
                    matches.extend(instance.matches)
    return ClassificationReport(
        graph6=write_graph6(g),
        n=g.n,
        connected=connected,
        dim=dim,
        distinguishing=dval,
        core_diameter=diameter(core),
        core_twin_order=twin_graph(core).quotient.n,
        in_family_f=in_family_f(g),
        matches=tuple(matches),
    )


def construction_graph(d_target: int, dim_target: int) -> Graph:
    """A graph whose distinguishing number is ``d_target`` and whose metric
    dimension is ``dim_target``, for any 1 <= d_target < dim_target.

    For d_target 1 this is the asymmetric broom tree with dim_target + 1
    pendant paths; otherwise the root of a smaller broom tree is joined to
    every vertex of a complete graph on d_target vertices, whose mutually
    twin vertices are the only symmetry left.
    """
    if not 1 <= d_target < dim_target:
        raise GraphError("the construction needs 1 <= d_target < dim_target")
    if d_target == 1:
        return broom_tree(dim_target + 1)
    tree = broom_tree(dim_target - d_target + 2)
    edges = tree.edges()
    base = tree.n
    for a in range(d_target):
        edges.append((0, base + a))
        for b in range(a + 1, d_target):
            edges.append((base + a, base + b))
    return build_graph(tree.n + d_target, edges)
