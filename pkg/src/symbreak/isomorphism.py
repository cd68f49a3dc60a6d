"""Canonical forms, isomorphism tests, exhaustive enumeration, graph6 I/O.

The canonical form of a graph is the lexicographically smallest upper
triangle of its adjacency matrix, read row by row, over all relabelings.
Two graphs are isomorphic exactly when their canonical forms coincide.

Canonicalisation of a single graph runs a depth-first search over vertex
orderings.  Twin vertices are interchangeable, so only one member of each
twin class branches at any level, and partial orderings are discarded as
soon as even their most optimistic completion cannot beat the best string
found so far.  Correctness, not speed, is the contract; the search is exact
for every order up to :data:`CANONICAL_MAX_VERTICES`.

Exhaustive enumeration works at orders up to :data:`ENUMERATION_MAX_ORDER`
by scoring all ``2^(n choose 2)`` labeled graphs under all ``n!``
relabelings at once (a vectorised minimum), then keeping the masks that are
their own minimum.  Larger orders enter through graph6 files.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graphs import (
    Graph,
    OrderLimitError,
    build_graph,
    is_connected,
    shortest_path_matrix,
    twin_partition,
)

CANONICAL_MAX_VERTICES = 10
ENUMERATION_MAX_ORDER = 6

#: graph6 bytes are printable ASCII offset by 63.
_G6_OFFSET = 63
_G6_MAX_BYTE = 126
_G6_SHORT_MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def _row_major_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@dataclass(frozen=True)
class CanonicalForm:
    """Packed row-major upper-triangle bits of the minimal relabeling.

    ``value`` holds the bits as an integer whose most significant bit is
    the (0, 1) entry; together with ``n`` it identifies the isomorphism
    class.  Equal forms mean isomorphic graphs and vice versa.
    """

    n: int
    value: int

    @property
    def bitstring(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.value, f"0{width}b") if width else ""


def canonical_form(g: Graph) -> CanonicalForm:
    """Smallest row-major upper-triangle bit string over all relabelings."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise OrderLimitError(
            f"canonical forms are supported up to {CANONICAL_MAX_VERTICES} vertices, got {g.n}"
        )
    return CanonicalForm(g.n, _min_row_major_value(g))


def _min_row_major_value(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    pairs = _row_major_pairs(n)
    num_pairs = len(pairs)
    pair_at = [[0] * n for _ in range(n)]
    for p, (i, j) in enumerate(pairs):
        pair_at[i][j] = p
    adj = g.adj

    class_id = [0] * n
    for ci, cls in enumerate(twin_partition(g)):
        for v in cls:
            class_id[v] = ci

    known = [-1] * num_pairs
    best: list[int] | None = None
    assigned: list[int] = []
    used = [False] * n

    def search() -> None:
        nonlocal best
        k = len(assigned)
        if k == n:
            if best is None or known < best:
                best = known.copy()
            return
        if best is not None:
            # Reading unknown bits as 0 gives the smallest completion this
            # branch could still reach; prune unless that beats the best.
            for p in range(num_pairs):
                bit = known[p]
                if bit < 0:
                    bit = 0
                if bit < best[p]:
                    break
                if bit > best[p]:
                    return
            else:
                return
        tried_classes = set()
        candidates = []
        for v in range(n):
            if used[v] or class_id[v] in tried_classes:
                continue
            tried_classes.add(class_id[v])
            column = tuple(adj[v] >> assigned[i] & 1 for i in range(k))
            candidates.append((column, adj[v].bit_count(), v))
        candidates.sort()
        for column, _, v in candidates:
            used[v] = True
            assigned.append(v)
            for i in range(k):
                known[pair_at[i][k]] = column[i]
            search()
            for i in range(k):
                known[pair_at[i][k]] = -1
            assigned.pop()
            used[v] = False

    search()
    assert best is not None
    value = 0
    for bit in best:
        value = value << 1 | bit
    return value


def pair_mask(g: Graph) -> int:
    """Row-major upper-triangle bits of ``g`` as one integer (MSB first)."""
    value = 0
    for i, j in _row_major_pairs(g.n):
        value = value << 1 | (g.adj[i] >> j & 1)
    return value


def graph_from_pair_mask(n: int, mask: int) -> Graph:
    pairs = _row_major_pairs(n)
    num_pairs = len(pairs)
    edges = [pairs[p] for p in range(num_pairs) if mask >> (num_pairs - 1 - p) & 1]
    return build_graph(n, edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """True when some bijection maps the edges of ``g`` exactly onto ``h``."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if g.n <= CANONICAL_MAX_VERTICES:
        return canonical_form(g) == canonical_form(h)
    return _isomorphism_search(g, h)


def _vertex_profiles(g: Graph) -> list[tuple]:
    dist = shortest_path_matrix(g)
    return [(g.degree(v), tuple(sorted(dist[v]))) for v in range(g.n)]


def _isomorphism_search(g: Graph, h: Graph) -> bool:
    n = g.n
    gp = _vertex_profiles(g)
    hp = _vertex_profiles(h)
    if sorted(gp) != sorted(hp):
        return False
    dist_g = shortest_path_matrix(g)
    dist_h = shortest_path_matrix(h)
    candidates = [[w for w in range(n) if hp[w] == gp[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(candidates[v]), v))
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row_v = dist_g[v]
        for w in candidates[v]:
            if used[w]:
                continue
            if all(row_v[u] == dist_h[w][image[u]] for u in order[:i]):
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> tuple[int, ...]:
    """Masks of the canonical representatives of all order-n graphs."""
    if n == 0:
        return (0,)
    pairs = _row_major_pairs(n)
    num_pairs = len(pairs)
    if num_pairs == 0:
        return (0,)
    pair_index = {pair: p for p, pair in enumerate(pairs)}
    shifts = np.array([num_pairs - 1 - p for p in range(num_pairs)], dtype=np.uint32)
    masks = np.arange(1 << num_pairs, dtype=np.int64)
    bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
    weights = (np.int64(1) << shifts).astype(np.int64)
    best = masks.copy()
    for perm in itertools.permutations(range(n)):
        src = np.empty(num_pairs, dtype=np.intp)
        trivial = True
        for p, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            src[p] = pair_index[(a, b)]
            trivial = trivial and src[p] == p
        if trivial:
            continue
        np.minimum(best, bits[:, src] @ weights, out=best)
    reps = np.nonzero(best == masks)[0]
    return tuple(int(m) for m in reps)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of order ``n``.

    Representatives are the graphs whose row-major pair mask is minimal in
    their class, emitted in increasing mask order, so the stream is
    deterministic and sorted by canonical form.

    Raises:
        OrderLimitError: for n above the internal generation bound; larger
            orders must be supplied as graph6 input instead.
    """
    if n > ENUMERATION_MAX_ORDER:
        raise OrderLimitError(
            f"internal enumeration is capped at order {ENUMERATION_MAX_ORDER}; "
            "supply a graph6 file for larger orders"
        )
    if n < 0:
        raise OrderLimitError("order must be non-negative")
    for mask in _canonical_masks(n):
        g = graph_from_pair_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6: packed column-major upper-triangle bits.

    Orders up to 62 use the single-byte header ``n + 63``; 63 and 64 use
    the standard ``~`` three-byte extension.
    """
    n = g.n
    if n <= _G6_SHORT_MAX_ORDER:
        header = chr(n + _G6_OFFSET)
    else:
        header = "~" + "".join(
            chr(_G6_OFFSET + (n >> shift & 0x3F)) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for at in range(0, len(bits), 6):
        value = 0
        for bit in bits[at : at + 6]:
            value = value << 1 | bit
        body.append(chr(value + _G6_OFFSET))
    return header + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    Raises:
        Graph6Error: on an empty line, a byte outside 63..126, a malformed
            or oversized header, a body of the wrong length, or nonzero
            padding bits.
    """
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 line")
    for ch in line:
        if not _G6_OFFSET <= ord(ch) <= _G6_MAX_BYTE:
            raise Graph6Error(f"byte {ord(ch)} out of the graph6 range 63..126")
    if line[0] == "~":
        if len(line) >= 2 and line[1] == "~":
            raise Graph6Error("graph6 orders above 64 are not supported")
        if len(line) < 4:
            raise Graph6Error("truncated graph6 long-form header")
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - _G6_OFFSET)
        body = line[4:]
    else:
        n = ord(line[0]) - _G6_OFFSET
        body = line[1:]
    if n > 64:
        raise Graph6Error(f"graph6 order {n} exceeds the 64-vertex cap")
    num_bits = n * (n - 1) // 2
    expected = (num_bits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body for order {n} must be {expected} bytes, got {len(body)}"
        )
    bits = []
    for ch in body:
        value = ord(ch) - _G6_OFFSET
        bits.extend(value >> shift & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[num_bits:]):
        raise Graph6Error("nonzero padding bits in graph6 body")
    edges = []
    at = 0
    for j in range(1, n):
        for i in range(j):
            if bits[at]:
                edges.append((i, j))
            at += 1
    return build_graph(n, edges)
