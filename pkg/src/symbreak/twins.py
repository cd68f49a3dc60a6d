"""Twin classes, the twin quotient graph, and the connected-core convention.

Two vertices are twins when they have the same neighbours apart from one
another; a class of mutual twins induces either a clique (type "K") or an
independent set (type "N"), and singleton classes have type "1".  The
quotient keeps one vertex per class, with classes adjacent exactly when
their members are.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, are_twins, build_graph, complement, is_connected, twin_partition
from .symmetry import automorphism_group

TYPE_SINGLETON = "1"
TYPE_CLIQUE = "K"
TYPE_INDEPENDENT = "N"


@dataclass(frozen=True)
class TwinStructure:
    """Twin classes with their types, the quotient graph, and alpha.

    ``alpha`` counts the classes of type "K" or "N", that is, the classes
    of size at least two.
    """

    classes: tuple[tuple[int, ...], ...]
    types: tuple[str, ...]
    quotient: Graph
    alpha: int

    def class_of(self, v: int) -> int:
        for index, cls in enumerate(self.classes):
            if v in cls:
                return index
        raise ValueError(f"vertex {v} not covered by the twin classes")

    def max_class_size(self) -> int:
        return max(len(cls) for cls in self.classes)


def twin_classes(g: Graph) -> list[list[int]]:
    """Maximal classes of mutual twins, verified to be an equivalence."""
    classes = twin_partition(g)
    for cls in classes:
        rep = cls[0]
        for v in cls[1:]:
            if not are_twins(g, rep, v):
                raise AssertionError("twin classes are not mutually twin")
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            if are_twins(g, classes[a][0], classes[b][0]):
                raise AssertionError("twin classes are not maximal")
    return classes


def twin_graph(g: Graph) -> TwinStructure:
    """Contract every twin class to one vertex and record the class types."""
    classes = [tuple(cls) for cls in twin_classes(g)]
    types = []
    for cls in classes:
        if len(cls) == 1:
            types.append(TYPE_SINGLETON)
        elif g.has_edge(cls[0], cls[1]):
            types.append(TYPE_CLIQUE)
        else:
            types.append(TYPE_INDEPENDENT)
    edges = [
        (a, b)
        for a in range(len(classes))
        for b in range(a + 1, len(classes))
        if g.has_edge(classes[a][0], classes[b][0])
    ]
    quotient = build_graph(len(classes), edges)
    alpha = sum(1 for t in types if t != TYPE_SINGLETON)
    return TwinStructure(tuple(classes), tuple(types), quotient, alpha)


def is_almost_asymmetric(g: Graph) -> bool:
    """True when every automorphism maps each twin class onto itself.

    In that case the only symmetries left are permutations inside classes,
    so the distinguishing number equals the largest class size.
    """
    structure = twin_graph(g)
    class_id = [0] * g.n
    for index, cls in enumerate(structure.classes):
        for v in cls:
            class_id[v] = index
    for f in automorphism_group(g).nontrivial():
        for v in range(g.n):
            if class_id[f[v]] != class_id[v]:
                return False
    return True


def core_graph(g: Graph) -> Graph:
    """The graph itself when connected, its complement otherwise.

    The complement of a disconnected graph is connected, so the result is
    always connected and metric computations apply to it directly.
    """
    return g if is_connected(g) else complement(g)
