"""Immutable bitset-backed graphs: construction, graph6 codec, generators.

Vertices are 0-based integers.  Each vertex stores its neighbourhood as a
Python int used as a bitmask, which keeps set algebra (intersection, union,
popcount) cheap for the graph orders this package cares about (n <= 1024).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 1024

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbour bitmask of v."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}], got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("adjacency rows do not match the vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside the graph")
            if row >> v & 1:
                raise ValueError(f"self-loop on vertex {v}")
        for v, row in enumerate(self.rows):
            for u in bit_indices(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- basic queries ---------------------------------------------------

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bit_indices(self.rows[u]):
                if u < v:
                    yield (u, v)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class InducedSubgraph:
    """A subgraph together with its relabeling map.

    ``vertices[i]`` is the label, in the parent graph, of the subgraph's
    vertex i.  Labels are kept in ascending order.
    """

    graph: Graph
    vertices: tuple[int, ...]

    def to_parent(self, v: int) -> int:
        return self.vertices[v]


@dataclass(frozen=True)
class LayerProfile:
    """Sizes of the breadth-first distance layers from a root vertex.

    ``layer_sizes[d]`` counts vertices at distance exactly d (so index 0 is
    always 1, the root).  Vertices in other components are tallied in
    ``unreachable`` and appear in no layer.
    """

    layer_sizes: tuple[int, ...]
    unreachable: int

    def size(self, d: int) -> int:
        return self.layer_sizes[d] if 0 <= d < len(self.layer_sizes) else 0


# -- constructors --------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from an edge list."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}], got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop on vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    """Circulant graph: i ~ j iff (i - j) mod n is +-offset for some offset."""
    if n < 1:
        raise ValueError("circulant graphs need at least one vertex")
    offs = sorted(set(offsets))
    for o in offs:
        if not 1 <= o <= n // 2:
            raise ValueError(f"offset {o} outside [1, {n // 2}]")
    edges = []
    for i in range(n):
        for o in offs:
            edges.append((i, (i + o) % n))
    return from_edges(n, edges)


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle, inner pentagram, spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edges(10, edges)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple((full & ~g.rows[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


# -- graph6 codec --------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        line = line[base:]
    if not line:
        raise GraphFormatError("empty graph6 string", base)
    if line[0] in ":;&":
        raise GraphFormatError(f"not a graph6 line (leading {line[0]!r})", base)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 alphabet", base + i)

    if line[0] == "~":
        if len(line) >= 2 and line[1] == "~":
            raise GraphFormatError("graph order beyond the 8-byte form is not supported", base)
        if len(line) < 4:
            raise GraphFormatError("truncated graph order field", base + len(line))
        n = ((ord(line[1]) - 63) << 12) | ((ord(line[2]) - 63) << 6) | (ord(line[3]) - 63)
        data_start = 4
    else:
        n = ord(line[0]) - 63
        data_start = 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph order {n} exceeds the supported maximum {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = line[data_start:]
    if len(data) < nchars:
        raise GraphFormatError(
            f"expected {nchars} adjacency characters, found {len(data)}", base + len(line)
        )
    if len(data) > nchars:
        raise GraphFormatError("trailing characters after adjacency data", base + data_start + nchars)

    rows = [0] * n
    # upper-triangle bits in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    i, j = 0, 1
    k = 0
    for ch in data:
        group = ord(ch) - 63
        for shift in (5, 4, 3, 2, 1, 0):
            if k >= nbits:
                break
            if group >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode a graph in canonical graph6 (zero padding bits)."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    chars = []
    group = 0
    filled = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        chars.append(chr(group + 63))
    return (GRAPH6_HEADER if header else "") + prefix + "".join(chars)


# -- neighbourhoods and derived graphs -----------------------------------


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Open neighbourhood N(v)."""
    g.check_vertex(v)
    return frozenset(bit_indices(g.rows[v]))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Closed neighbourhood N[v] = N(v) + v."""
    g.check_vertex(v)
    return frozenset(bit_indices(g.rows[v] | 1 << v))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced on the given vertices, with the relabeling map."""
    labels = sorted(set(vertices))
    for v in labels:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(labels)}
    rows = [0] * len(labels)
    for v in labels:
        for u in bit_indices(g.rows[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return InducedSubgraph(Graph(len(labels), tuple(rows)), tuple(labels))


def residual(g: Graph, v: int) -> InducedSubgraph:
    """Subgraph induced on the vertices outside the closed neighbourhood of v."""
    g.check_vertex(v)
    outside = g.full_mask & ~(g.rows[v] | 1 << v)
    return induced_subgraph(g, bit_indices(outside))


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one endpoint in a and the other in b (disjoint sets)."""
    set_a = set(a)
    set_b = set(b)
    if set_a & set_b:
        raise ValueError("vertex sets must be disjoint")
    mask_b = 0
    for v in set_b:
        g.check_vertex(v)
        mask_b |= 1 << v
    total = 0
    for v in set_a:
        g.check_vertex(v)
        total += (g.rows[v] & mask_b).bit_count()
    return total


# -- distances -----------------------------------------------------------


def bfs_distances(g: Graph, v: int) -> list[int | float]:
    """Distances from v; unreachable vertices get math.inf."""
    g.check_vertex(v)
    dist: list[int | float] = [math.inf] * g.n
    dist[v] = 0
    frontier = 1 << v
    seen = frontier
    d = 0
    while frontier:
        reach = 0
        for u in bit_indices(frontier):
            reach |= g.rows[u]
        frontier = reach & ~seen
        seen |= frontier
        d += 1
        for u in bit_indices(frontier):
            dist[u] = d
    return dist


def distance_layers(g: Graph, v: int) -> LayerProfile:
    """Breadth-first layer sizes from v."""
    dist = bfs_distances(g, v)
    finite = [d for d in dist if d != math.inf]
    ecc = max(finite)
    sizes = [0] * (int(ecc) + 1)
    for d in finite:
        sizes[int(d)] += 1
    return LayerProfile(tuple(sizes), dist.count(math.inf))


def diameter(g: Graph) -> int | float:
    """Largest distance between two vertices; math.inf when disconnected."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    worst: int | float = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc = max(dist)
        if ecc == math.inf:
            return math.inf
        worst = max(worst, ecc)
    return int(worst)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return math.inf not in bfs_distances(g, 0)
