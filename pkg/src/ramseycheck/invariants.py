"""Exact graph invariants with witnesses: cliques, independence, connectivity.

Everything here is deterministic: identical inputs give identical witnesses.
The independence solver is a branch-and-bound search over vertex bitmasks;
connectivity uses unit-capacity max-flow (vertex-split for the vertex
version), so both Menger directions are exercised by the oracle tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, bit_indices, diameter as graph_diameter


@dataclass(frozen=True)
class RamseyConstants:
    """Known Ramsey values and edge bounds used by the screening profiles."""

    ramsey_numbers: tuple[tuple[tuple[int, int], int], ...] = (
        ((3, 3), 6),
        ((3, 8), 28),
        ((3, 9), 36),
    )
    min_edges_3_9_34: int = 129
    min_edges_3_10_40: int = 161
    min_edges_3_10_41: int = 172
    max_edges_3_10_41: int = 184

    def ramsey(self, s: int, t: int) -> int:
        for key, value in self.ramsey_numbers:
            if key == (s, t):
                return value
        raise KeyError(f"R({s},{t}) is not on record")


CONSTANTS = RamseyConstants()


# -- cliques -------------------------------------------------------------


def has_clique(g: Graph, size: int) -> tuple[bool, tuple[int, ...] | None]:
    """Search for a clique with ``size`` vertices; returns (found, witness)."""
    if size < 1:
        raise ValueError("clique size must be at least 1")
    if size > g.n:
        return (False, None)
    if size == 1:
        return (True, (0,))
    if size == 2:
        for u in range(g.n):
            row = g.rows[u] >> (u + 1)
            if row:
                return (True, (u, u + 1 + (row & -row).bit_length() - 1))
        return (False, None)
    if size == 3:
        for u in range(g.n):
            row_u = g.rows[u]
            for v in bit_indices(row_u >> (u + 1) << (u + 1)):
                common = row_u & g.rows[v] >> (v + 1) << (v + 1)
                if common:
                    w = (common & -common).bit_length() - 1
                    return (True, (u, v, w))
        return (False, None)
    witness = _clique_search(g.rows, g.full_mask, size, ())
    return (witness is not None, witness)


def _clique_search(rows, cand: int, need: int, chosen: tuple[int, ...]):
    if need == 0:
        return chosen
    if cand.bit_count() < need:
        return None
    for v in bit_indices(cand):
        above = ~((1 << (v + 1)) - 1)
        found = _clique_search(rows, cand & rows[v] & above, need - 1, chosen + (v,))
        if found is not None:
            return found
        cand &= ~(1 << v)
        if cand.bit_count() < need:
            return None
    return None


# -- independence --------------------------------------------------------


def _cover_bound(rows, mask: int) -> int:
    """Greedy clique cover of the vertices in mask; upper bound on independence."""
    cliques: list[int] = []
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        for idx, common in enumerate(cliques):
            if common >> v & 1:
                cliques[idx] = common & rows[v]
                break
        else:
            cliques.append(rows[v])
    return len(cliques)


def _mis_search(rows, start_mask: int, stop_at: int | None) -> tuple[int, int]:
    """Maximum independent set inside start_mask by branch and bound.

    Branches on a maximum-degree vertex of the current candidate set (ties to
    the lowest index), include-branch first, pruned with the greedy
    clique-cover bound.  Stops early once ``stop_at`` vertices are reached.
    Returns (size, vertex mask).
    """
    best_size = 0
    best_mask = 0

    def dfs(pool: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if stop_at is not None and best_size >= stop_at:
            return
        if pool == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _cover_bound(rows, pool) <= best_size:
            return
        pick = -1
        pick_deg = -1
        m = pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (rows[v] & pool).bit_count()
            if d > pick_deg:
                pick_deg, pick = d, v
        if pick_deg == 0:
            total = size + pool.bit_count()
            if total > best_size:
                best_size, best_mask = total, chosen | pool
            return
        v = pick
        dfs(pool & ~(rows[v] | 1 << v), chosen | 1 << v, size + 1)
        dfs(pool & ~(1 << v), chosen, size)

    dfs(start_mask, 0, 0)
    return best_size, best_mask


def max_independent_set(g: Graph) -> tuple[int, ...]:
    """A maximum independent set (deterministic witness)."""
    _, mask = _mis_search(g.rows, g.full_mask, None)
    return tuple(bit_indices(mask))


def independence_number(g: Graph) -> int:
    """Exact independence number; never stops early."""
    size, _ = _mis_search(g.rows, g.full_mask, None)
    return size


def has_independent_set(g: Graph, size: int) -> tuple[bool, tuple[int, ...] | None]:
    """Threshold query: is there an independent set with ``size`` vertices?

    Short-circuits as soon as one is found, which is what the screening
    clauses need; the witness is trimmed to exactly ``size`` vertices.
    """
    if size < 0:
        raise ValueError("independent set size must be non-negative")
    if size == 0:
        return (True, ())
    if size > g.n:
        return (False, None)
    found, mask = _mis_search(g.rows, g.full_mask, size)
    if found >= size:
        return (True, tuple(bit_indices(mask))[:size])
    return (False, None)


# -- connectivity --------------------------------------------------------


class _FlowNet:
    """Tiny unit-capacity max-flow network (BFS augmentation)."""

    def __init__(self, n: int):
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            prev = {s: -1}
            queue = [s]
            while queue and t not in prev:
                nxt = []
                for u in queue:
                    for arc in self.adj[u]:
                        v = self.to[arc]
                        if v not in prev and self.cap[arc] > 0:
                            prev[v] = arc
                            nxt.append(v)
                queue = nxt
            if t not in prev:
                break
            v = t
            while v != s:
                arc = prev[v]
                self.cap[arc] -= 1
                self.cap[arc ^ 1] += 1
                v = self.to[arc ^ 1]
            flow += 1
        return flow


def _local_vertex_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    # vertex splitting: v becomes 2v (in) -> 2v+1 (out) with capacity 1
    net = _FlowNet(2 * g.n)
    big = g.n
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, 1)
    for u in range(g.n):
        for v in bit_indices(g.rows[u]):
            net.add(2 * u + 1, 2 * v, big)
    return net.max_flow(2 * s + 1, 2 * t, limit)


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity via Menger max-flow over a dominating pair set.

    Every minimum cut either separates a fixed minimum-degree vertex v from a
    non-neighbour, or separates two non-adjacent neighbours of v; complete
    graphs fall out as n - 1 because no non-adjacent pair exists.
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    v = min(range(n), key=lambda u: (g.degree(u), u))
    best = g.degree(v)
    for w in range(n):
        if w != v and not g.rows[v] >> w & 1:
            best = min(best, _local_vertex_connectivity(g, v, w, best))
            if best == 0:
                return 0
    nb = list(bit_indices(g.rows[v]))
    for i, x in enumerate(nb):
        for y in nb[i + 1 :]:
            if not g.rows[x] >> y & 1:
                best = min(best, _local_vertex_connectivity(g, x, y, best))
    return best


def edge_connectivity(g: Graph) -> int:
    """Exact edge connectivity: min cut separates vertex 0 from some other."""
    n = g.n
    if n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    best = min(g.degrees())
    for t in range(1, n):
        if best == 0:
            break
        net = _FlowNet(n)
        for u in range(n):
            for v in bit_indices(g.rows[u]):
                if u < v:
                    net.add(u, v, 1)
                    net.add(v, u, 1)
        best = min(best, net.max_flow(0, t, best))
    return best


# -- composite checks ----------------------------------------------------


@dataclass(frozen=True)
class RamseyCheck:
    ok: bool
    clique_witness: tuple[int, ...] | None
    independent_set_witness: tuple[int, ...] | None


def is_ramsey_graph(g: Graph, s: int, t: int) -> RamseyCheck:
    """Does g avoid both an s-clique and an independent set of t vertices?"""
    if s < 1 or t < 1:
        raise ValueError("clique and independence bounds must be positive")
    _, clique_w = has_clique(g, s)
    _, indep_w = has_independent_set(g, t)
    return RamseyCheck(clique_w is None and indep_w is None, clique_w, indep_w)


def mantel_check(g: Graph) -> dict:
    """Triangle-free edge bound e <= n^2/4 (vacuous for graphs with triangles)."""
    found, witness = has_clique(g, 3) if g.n >= 3 else (False, None)
    bound = g.n * g.n // 4
    ok = found or g.edge_count <= bound
    return {
        "triangle_free": not found,
        "triangle": witness,
        "edge_count": g.edge_count,
        "bound": bound,
        "ok": ok,
    }


def verify_r39_critical(g: Graph) -> dict:
    """Check the defining facts of the unique (3,9,35) graph.

    Order 35, 8-regular, triangle-free, independence number exactly 8.
    Returns a per-check dict plus the overall verdict.
    """
    checks: dict[str, bool] = {}
    checks["order_35"] = g.n == 35
    degs = g.degrees()
    checks["regular_8"] = bool(degs) and min(degs) == max(degs) == 8
    triangle, _ = has_clique(g, 3) if g.n >= 3 else (False, None)
    checks["triangle_free"] = not triangle
    has8, _ = has_independent_set(g, 8)
    has9, _ = has_independent_set(g, 9)
    checks["independence_8"] = has8 and not has9
    return {"checks": checks, "ok": all(checks.values())}


@dataclass(frozen=True)
class InvariantSummary:
    order: int
    size: int
    min_degree: int
    max_degree: int
    is_regular: bool
    independence_number: int
    vertex_connectivity: int
    edge_connectivity: int
    diameter: int | float

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "size": self.size,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "is_regular": self.is_regular,
            "independence_number": self.independence_number,
            "vertex_connectivity": self.vertex_connectivity,
            "edge_connectivity": self.edge_connectivity,
            "diameter": "infinite" if self.diameter == math.inf else int(self.diameter),
        }


def invariant_summary(g: Graph) -> InvariantSummary:
    """One-stop summary; needs n >= 2 for the connectivity entries."""
    degs = g.degrees()
    return InvariantSummary(
        order=g.n,
        size=g.edge_count,
        min_degree=min(degs),
        max_degree=max(degs),
        is_regular=min(degs) == max(degs),
        independence_number=independence_number(g),
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        diameter=graph_diameter(g),
    )
