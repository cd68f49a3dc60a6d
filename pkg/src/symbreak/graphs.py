"""Immutable bit-row graphs and the standard constructions built on them.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one integer
bitmask per vertex, so neighbourhood algebra (union, intersection,
complement) costs a couple of machine-word operations.  Orders above 64 are
rejected, which keeps every row inside a single word; everything this
package verifies exhaustively lives far below that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

#: Distance placeholder for vertex pairs in different components.
INFINITY = math.inf


class GraphError(ValueError):
    """Invalid graph construction, or an operation applied outside its domain."""


class DisconnectedError(GraphError):
    """Raised by operations that require a connected graph."""


class OrderLimitError(GraphError):
    """Graph order exceeds the bound supported by an exhaustive routine."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with one adjacency bitmask per vertex.

    Instances are immutable and hashable, so they are safe to share across
    workers and to use as cache keys.  The constructor validates symmetry
    and irreflexivity; use :func:`build_graph` to create graphs from edge
    lists.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order must be between 0 and {MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("number of adjacency rows does not match the order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} mentions vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as pairs (u, v) with u < v, in row-major order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    @cached_property
    def _distance_matrix(self) -> tuple[tuple[float, ...], ...]:
        return tuple(_bfs_row(self.adj, self.n, src) for src in range(self.n))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bfs_row(adj: Sequence[int], n: int, src: int) -> tuple[float, ...]:
    dist: list[float] = [INFINITY] * n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    d = 0
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= adj[v]
        frontier = reach & ~seen
        seen |= frontier
        d += 1
        for v in _bits(frontier):
            dist[v] = d
    return tuple(dist)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, symmetrising automatically.

    Raises:
        GraphError: on an endpoint outside ``0..n-1``, a self-loop, or
            ``n`` above the 64-vertex cap.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"order must be between 0 and {MAX_VERTICES}, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Edge uv present in the result exactly when absent in ``g`` (u != v)."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Concatenate the vertex sets with no edges between the parts."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"union order {n} exceeds the {MAX_VERTICES}-vertex cap")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"join order {n} exceeds the {MAX_VERTICES}-vertex cap")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, tuple(rows))


def blow_up(g: Graph, parts: Sequence[tuple[int, str]]) -> Graph:
    """Replace vertex ``i`` of ``g`` by a complete or empty part.

    ``parts[i]`` is ``(size, kind)`` with kind ``"complete"`` or ``"empty"``.
    Vertices of two distinct parts are fully joined exactly when the
    corresponding vertices of ``g`` are adjacent.

    Raises:
        GraphError: if ``len(parts) != g.n``, a size is below 1, a kind is
            unknown, or the total order overflows the cap.
    """
    if len(parts) != g.n:
        raise GraphError(f"expected {g.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for size, kind in parts:
        if size < 1:
            raise GraphError(f"part sizes must be at least 1, got {size}")
        if kind not in ("complete", "empty"):
            raise GraphError(f"unknown part kind {kind!r}")
        offsets.append(total)
        total += size
    if total > MAX_VERTICES:
        raise GraphError(f"blow-up order {total} exceeds the {MAX_VERTICES}-vertex cap")
    edges = []
    for i, (size, kind) in enumerate(parts):
        base = offsets[i]
        if kind == "complete":
            edges += [(base + a, base + b) for a in range(size) for b in range(a + 1, size)]
        for j in _bits(g.adj[i]):
            if j <= i:
                continue
            other_size = parts[j][0]
            edges += [
                (base + a, offsets[j] + b) for a in range(size) for b in range(other_size)
            ]
    return build_graph(total, edges)


def shortest_path_matrix(g: Graph) -> tuple[tuple[float, ...], ...]:
    """BFS hop distances; ``INFINITY`` across components, zero diagonal."""
    return g._distance_matrix


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INFINITY not in g._distance_matrix[0]


def diameter(g: Graph) -> int:
    """Largest pairwise distance.  Raises on disconnected input."""
    if not is_connected(g):
        raise DisconnectedError("diameter is undefined for disconnected graphs")
    if g.n <= 1:
        return 0
    return int(max(max(row) for row in g._distance_matrix))


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True when u and v have the same neighbours apart from one another.

    Covers both the non-adjacent case (equal open neighbourhoods) and the
    adjacent case (equal closed neighbourhoods) in a single bitmask test.
    """
    if u == v:
        return True
    return (g.adj[u] & ~(1 << v)) == (g.adj[v] & ~(1 << u))


def twin_partition(g: Graph) -> list[list[int]]:
    """Partition the vertices into maximal classes of mutual twins.

    The relation "equal or twins" is an equivalence on simple graphs (a
    vertex cannot have both an open and a closed twin), so grouping against
    one representative per class is exact.
    """
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            if are_twins(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

_SPEC_KINDS = frozenset(
    {
        "path",
        "cycle",
        "complete",
        "empty",
        "complete_bipartite",
        "complete_multipartite",
        "broom_tree",
        "house",
        "complement",
        "union",
        "join",
        "blow_up",
    }
)


@dataclass(frozen=True)
class FamilySpec:
    """A recursive description of a named graph family instance.

    Leaf kinds carry integer parameters; ``union``, ``join`` and
    ``complement`` combine sub-specs; ``blow_up`` pairs a base spec with a
    tuple of ``(size, "complete"|"empty")`` pieces.  Every closed formula
    appearing in the characterisation catalogs is expressible as one of
    these trees, so no family needs bespoke construction code.
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()
    pieces: tuple[tuple[int, str], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _SPEC_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")

    # Shorthand constructors keep catalog tables readable.
    @staticmethod
    def path(n: int) -> "FamilySpec":
        return FamilySpec("path", (n,))

    @staticmethod
    def cycle(n: int) -> "FamilySpec":
        return FamilySpec("cycle", (n,))

    @staticmethod
    def complete(n: int) -> "FamilySpec":
        return FamilySpec("complete", (n,))

    @staticmethod
    def empty(n: int) -> "FamilySpec":
        return FamilySpec("empty", (n,))

    @staticmethod
    def bipartite(s: int, t: int) -> "FamilySpec":
        return FamilySpec("complete_bipartite", (s, t))

    @staticmethod
    def multipartite(*sizes: int) -> "FamilySpec":
        return FamilySpec("complete_multipartite", tuple(sizes))

    @staticmethod
    def broom(k: int) -> "FamilySpec":
        return FamilySpec("broom_tree", (k,))

    @staticmethod
    def house() -> "FamilySpec":
        return FamilySpec("house")

    @staticmethod
    def complement_of(sub: "FamilySpec") -> "FamilySpec":
        return FamilySpec("complement", parts=(sub,))

    @staticmethod
    def union_of(*subs: "FamilySpec") -> "FamilySpec":
        return FamilySpec("union", parts=tuple(subs))

    @staticmethod
    def join_of(*subs: "FamilySpec") -> "FamilySpec":
        return FamilySpec("join", parts=tuple(subs))

    @staticmethod
    def blow(base: "FamilySpec", *pieces: tuple[int, str]) -> "FamilySpec":
        return FamilySpec("blow_up", parts=(base,), pieces=tuple(pieces))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("paths need at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graphs need at least one vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graphs need at least one vertex")
    return build_graph(n, [])


def complete_multipartite_graph(*sizes: int) -> Graph:
    if len(sizes) < 2:
        raise GraphError("complete multipartite graphs need at least two parts")
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be at least 1")
    return blow_up(complete_graph(len(sizes)), [(s, "empty") for s in sizes])


def broom_tree(k: int) -> Graph:
    """Rooted tree whose root has degree ``k`` and whose k pendant paths
    have lengths 1..k, so the k leaves sit at distances 1..k from the root.

    The order is 1 + k(k+1)/2 and the tree has a trivial symmetry group for
    every k >= 3 (the pendant paths all have distinct lengths).
    """
    if k < 3:
        raise GraphError(f"broom trees need k >= 3, got {k}")
    edges = []
    nxt = 1
    for length in range(1, k + 1):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def house_graph() -> Graph:
    """The 5-cycle with one chord: degree sequence (3, 3, 2, 2, 2)."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def construct_family(spec: FamilySpec) -> Graph:
    """Materialise a :class:`FamilySpec` as a concrete graph."""
    kind = spec.kind
    if kind == "path":
        return path_graph(spec.params[0])
    if kind == "cycle":
        return cycle_graph(spec.params[0])
    if kind == "complete":
        return complete_graph(spec.params[0])
    if kind == "empty":
        return empty_graph(spec.params[0])
    if kind == "complete_bipartite":
        return complete_multipartite_graph(*spec.params)
    if kind == "complete_multipartite":
        return complete_multipartite_graph(*spec.params)
    if kind == "broom_tree":
        return broom_tree(spec.params[0])
    if kind == "house":
        return house_graph()
    if kind == "complement":
        return complement(construct_family(spec.parts[0]))
    if kind == "union":
        if not spec.parts:
            raise GraphError("union needs at least one part")
        result = construct_family(spec.parts[0])
        for sub in spec.parts[1:]:
            result = disjoint_union(result, construct_family(sub))
        return result
    if kind == "join":
        if not spec.parts:
            raise GraphError("join needs at least one part")
        result = construct_family(spec.parts[0])
        for sub in spec.parts[1:]:
            result = join(result, construct_family(sub))
        return result
    if kind == "blow_up":
        return blow_up(construct_family(spec.parts[0]), spec.pieces)
    raise GraphError(f"unknown family kind {kind!r}")
