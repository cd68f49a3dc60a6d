"""Automorphism groups, distinguishing colorings, and the resolving-set
coloring that breaks every symmetry of a connected graph.

The group is listed in full.  Orders are tiny at the scales verified
exhaustively here (at most 6! for six vertices), membership scans fail fast,
and sorting the elements by support size means a non-distinguishing coloring
is usually refuted by one of the first few transposition-like elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import (
    DisconnectedError,
    Graph,
    GraphError,
    OrderLimitError,
    is_connected,
    shortest_path_matrix,
)
from .resolving import is_resolving

#: Full listing stays feasible well past ten vertices when the group is
#: small; the verified constructions reach sixteen vertices with groups of
#: order at most 24, so the vertex cap sits there.  The element cap guards
#: against graphs whose group is too large to list at all.
AUT_MAX_VERTICES = 16
AUT_MAX_GROUP_SIZE = 50_000


class NotResolvingError(GraphError):
    """The supplied vertex set does not resolve the graph."""


@dataclass(frozen=True)
class AutomorphismGroup:
    """Every adjacency-preserving permutation, identity included.

    Elements are one-line image tuples sorted by support size, identity
    first, so fail-fast scans meet transposition-like elements early.
    """

    n: int
    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return self.elements[1:]


@dataclass(frozen=True)
class Coloring:
    """A vertex coloring with colors 1..k; surjectivity is not required."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise GraphError("colorings need at least one color")
        if any(not 1 <= c <= self.k for c in self.colors):
            raise GraphError("vertex colors must lie in 1..k")


@lru_cache(maxsize=8192)
def automorphism_group(g: Graph) -> AutomorphismGroup:
    """List the automorphism group of ``g`` exactly.

    Backtracks over vertex images, filtering candidates by degree and
    distance profile and forcing every assigned pair to preserve the
    distance matrix (automorphisms are isometries, so nothing is lost).

    Raises:
        OrderLimitError: above the vertex cap, or when the group has more
            elements than can reasonably be listed.
    """
    n = g.n
    if n > AUT_MAX_VERTICES:
        raise OrderLimitError(
            f"automorphism listing is supported up to {AUT_MAX_VERTICES} vertices, got {n}"
        )
    if n == 0:
        return AutomorphismGroup(0, ((),))
    dist = shortest_path_matrix(g)
    profile = [(g.degree(v), tuple(sorted(dist[v]))) for v in range(n)]
    candidates = [[w for w in range(n) if profile[w] == profile[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(candidates[v]), v))
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(i: int) -> None:
        if i == n:
            found.append(tuple(image))
            if len(found) > AUT_MAX_GROUP_SIZE:
                raise OrderLimitError(
                    f"automorphism group exceeds {AUT_MAX_GROUP_SIZE} elements"
                )
            return
        v = order[i]
        row_v = dist[v]
        for w in candidates[v]:
            if used[w]:
                continue
            if all(row_v[u] == dist[w][image[u]] for u in order[:i]):
                image[v] = w
                used[w] = True
                extend(i + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    found.sort(key=lambda f: (sum(1 for v in range(n) if f[v] != v), f))
    return AutomorphismGroup(n, tuple(found))


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Orbits of the automorphism group acting on the vertices."""
    group = automorphism_group(g)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in group.nontrivial():
        for v in range(g.n):
            a, b = find(v), find(f[v])
            if a != b:
                parent[a] = b
    buckets: dict[int, list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(find(v), []).append(v)
    return sorted(buckets.values())


def _supports(group: AutomorphismGroup) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    moved = []
    for f in group.nontrivial():
        moved.append((tuple(v for v in range(group.n) if f[v] != v), f))
    return moved


def _breaks_all(colors: Sequence[int], moved: list[tuple[tuple[int, ...], tuple[int, ...]]]) -> bool:
    for support, f in moved:
        for v in support:
            if colors[f[v]] != colors[v]:
                break
        else:
            return False
    return True


def is_distinguishing(g: Graph, coloring: Coloring) -> bool:
    """True when no non-identity automorphism preserves every color."""
    if len(coloring.colors) != g.n:
        raise GraphError("coloring length does not match the graph order")
    return _breaks_all(coloring.colors, _supports(automorphism_group(g)))


@lru_cache(maxsize=65536)
def distinguishing_number(g: Graph) -> int:
    """Least number of colors admitting a distinguishing coloring.

    Enumerates colorings as functions for ascending k, with vertex 0 pinned
    to color 1 (renaming colors never changes whether a coloring
    distinguishes).  Practical up to eight vertices for arbitrary graphs and
    far beyond for graphs with small groups.
    """
    if g.n == 0:
        raise GraphError("distinguishing number needs at least one vertex")
    moved = _supports(automorphism_group(g))
    if not moved:
        return 1
    n = g.n
    for k in range(1, n + 1):
        for rest in itertools.product(range(1, k + 1), repeat=n - 1):
            if _breaks_all((1,) + rest, moved):
                return k
    raise AssertionError("an all-distinct coloring always distinguishes")


def coloring_from_resolving_set(g: Graph, landmarks: Iterable[int]) -> Coloring:
    """Color a resolving set with distinct colors and the rest uniformly.

    Landmark i (in ascending vertex order) receives color i+1 and every
    other vertex color ``len(S) + 1``.  Any color-preserving automorphism
    would fix all landmarks pointwise and, being an isometry, could not move
    anything else either, so the result always distinguishes.

    Raises:
        DisconnectedError: on disconnected input.
        NotResolvingError: when the vertex set does not resolve the graph,
            since the guarantee only holds for resolving sets.
    """
    if not is_connected(g):
        raise DisconnectedError("the coloring construction needs a connected graph")
    ordered = sorted(set(landmarks))
    if not is_resolving(g, ordered):
        raise NotResolvingError(f"{ordered} does not resolve the graph")
    rest_color = len(ordered) + 1
    colors = [rest_color] * g.n
    for index, v in enumerate(ordered):
        colors[v] = index + 1
    return Coloring(tuple(colors), rest_color)
