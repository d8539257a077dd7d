"""Necessary-condition screening for (3,10)-critical graph candidates.

A TargetParams profile carries every threshold; ``full_report`` evaluates a
fixed, ordered ledger of clauses against a graph and reports pass, fail or
not-applicable per clause.  Clauses are necessary conditions only: a clean
report never certifies criticality, a failing clause does refute it.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from math import comb

from .graphs import (
    Graph,
    bit_indices,
    diameter as graph_diameter,
    distance_layers,
    edges_between,
    neighborhood,
    residual,
)
from .invariants import is_ramsey_graph, vertex_connectivity

SCHEMA_VERSION = 1

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_NA = "not-applicable"
VERDICT_BUDGET = "budget-exceeded"
VERDICT_ERROR = "error"


@dataclass(frozen=True)
class TargetParams:
    """All thresholds for one screening profile.

    Structural fields left at None disable their clause (reported as
    not-applicable).  ``extrapolated`` marks profiles whose structural facts
    were derived for other parameters and are merely being reused.
    """

    name: str
    clique_bound: int
    independence_bound: int
    order: int
    extrapolated: bool = False
    neighbor_degree_sum_threshold: int | None = None
    degree_window: tuple[int, int] | None = None
    edge_window: tuple[int, int] | None = None
    diameter_window: tuple[int, int] | None = None
    min_degree9_count: int | None = None
    degree6_total_max: int | None = None
    degree6_diam2_max: int | None = None
    h21_window: tuple[int, int] | None = None
    residual_degree8_window: tuple[int, int] | None = None
    boundary_edge_window: tuple[int, int] | None = None
    union_neighborhood_bound: int | None = None
    layer2_window: tuple[int, int] | None = None
    layer3_window: tuple[int, int] | None = None
    neighborhood_degree6_max: int | None = None
    connectivity_min: int | None = None
    connectivity_requires_diam2: bool = False
    smallest_cut_check: bool = False

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "clique_bound": self.clique_bound,
            "independence_bound": self.independence_bound,
            "order": self.order,
            "extrapolated": self.extrapolated,
            "neighbor_degree_sum_threshold": self.neighbor_degree_sum_threshold,
            "degree_window": _window(self.degree_window),
            "edge_window": _window(self.edge_window),
            "diameter_window": _window(self.diameter_window),
            "min_degree9_count": self.min_degree9_count,
            "degree6_total_max": self.degree6_total_max,
            "degree6_diam2_max": self.degree6_diam2_max,
            "h21_window": _window(self.h21_window),
            "residual_degree8_window": _window(self.residual_degree8_window),
            "boundary_edge_window": _window(self.boundary_edge_window),
            "union_neighborhood_bound": self.union_neighborhood_bound,
            "layer2_window": _window(self.layer2_window),
            "layer3_window": _window(self.layer3_window),
            "neighborhood_degree6_max": self.neighborhood_degree6_max,
            "connectivity_min": self.connectivity_min,
            "connectivity_requires_diam2": self.connectivity_requires_diam2,
            "smallest_cut_check": self.smallest_cut_check,
        }


def _window(w: tuple[int, int] | None) -> list[int] | None:
    return None if w is None else [w[0], w[1]]


def gamma41() -> TargetParams:
    """Profile for candidates on 41 vertices."""
    return TargetParams(
        name="gamma41",
        clique_bound=3,
        independence_bound=10,
        order=41,
        neighbor_degree_sum_threshold=12,
        degree_window=(6, 9),
        edge_window=(172, 184),
        diameter_window=(2, 3),
        min_degree9_count=16,
        degree6_total_max=6,
        degree6_diam2_max=2,
        h21_window=(20, 24),
        residual_degree8_window=(20, 24),
        boundary_edge_window=(44, 48),
        connectivity_min=6,
    )


def omega40() -> TargetParams:
    """Profile for candidates on 40 vertices."""
    return TargetParams(
        name="omega40",
        clique_bound=3,
        independence_bound=10,
        order=40,
        neighbor_degree_sum_threshold=11,
        degree_window=(4, 9),
        edge_window=(161, 180),
        min_degree9_count=1,
        union_neighborhood_bound=11,
        layer2_window=(19, 24),
        layer3_window=(11, 17),
        neighborhood_degree6_max=2,
        connectivity_min=6,
        connectivity_requires_diam2=True,
        smallest_cut_check=True,
    )


def custom(s: int, t: int, n: int) -> TargetParams:
    """Bare profile for arbitrary (s, t, n); only the core clauses apply."""
    if s < 1 or t < 1 or n < 0:
        raise ValueError("custom profile needs positive bounds and non-negative order")
    return TargetParams(
        name=f"custom-{s}-{t}-{n}",
        clique_bound=s,
        independence_bound=t,
        order=n,
        extrapolated=True,
    )


PROFILES = {"gamma41": gamma41, "omega40": omega40}


def profile_by_name(name: str) -> TargetParams:
    try:
        return PROFILES[name]()
    except KeyError:
        raise ValueError(f"unknown profile {name!r}; expected one of {sorted(PROFILES)}") from None


# -- neighbourhood partition ---------------------------------------------


@dataclass(frozen=True)
class PartitionProfile:
    """How the vertices outside N[v] split by common-neighbour count with v.

    ``counts`` maps i to the number of outside vertices sharing exactly i
    neighbours with v; zero multiplicities are omitted.  ``boundary_edges``
    counts edges between N(v) and the outside, which equals the weighted sum
    of the multiplicities.
    """

    vertex: int
    counts: tuple[tuple[int, int], ...]
    boundary_edges: int
    residual_order: int

    def count(self, i: int) -> int:
        for key, mult in self.counts:
            if key == i:
                return mult
        return 0

    def as_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "counts": {str(k): m for k, m in self.counts},
            "boundary_edges": self.boundary_edges,
            "residual_order": self.residual_order,
        }


def neighborhood_partition(g: Graph, v: int) -> PartitionProfile:
    """Partition profile of v: multiplicities of common-neighbour counts."""
    g.check_vertex(v)
    row_v = g.rows[v]
    outside = g.full_mask & ~(row_v | 1 << v)
    tally: dict[int, int] = {}
    weighted = 0
    for u in bit_indices(outside):
        i = (g.rows[u] & row_v).bit_count()
        tally[i] = tally.get(i, 0) + 1
        weighted += i
    check = edges_between(g, neighborhood(g, v), frozenset(bit_indices(outside)))
    if check != weighted:
        raise AssertionError("partition multiplicities disagree with the boundary edge count")
    counts = tuple(sorted((k, m) for k, m in tally.items() if m))
    return PartitionProfile(v, counts, weighted, outside.bit_count())


# -- standalone clause operations ----------------------------------------


def degree_sum_pair_ok(g: Graph, threshold: int) -> tuple[bool, tuple[int, int, int] | None]:
    """No vertex may have two distinct neighbours whose degrees sum to the
    threshold or less; returns the first offending (v, u, w) otherwise."""
    degs = g.degrees()
    for v in range(g.n):
        nb = list(bit_indices(g.rows[v]))
        for i, u in enumerate(nb):
            for w in nb[i + 1 :]:
                if degs[u] + degs[w] <= threshold:
                    return (False, (v, u, w))
    return (True, None)


def union_neighborhood_ok(g: Graph, bound: int) -> tuple[bool, tuple[int, int, int] | None]:
    """Any two neighbours of a common vertex must jointly cover at least
    ``bound`` vertices; returns the first offending (v, u, w) otherwise."""
    for v in range(g.n):
        nb = list(bit_indices(g.rows[v]))
        for i, u in enumerate(nb):
            for w in nb[i + 1 :]:
                if (g.rows[u] | g.rows[w]).bit_count() < bound:
                    return (False, (v, u, w))
    return (True, None)


@dataclass(frozen=True)
class CensusResult:
    ok: bool
    count: int
    vertices: tuple[int, ...]
    witness: dict | None


def degree6_census_ok(g: Graph, params: TargetParams, diam: int | float | None = None) -> CensusResult:
    """Count degree-6 vertices against the profile caps.

    The overall cap always applies; at diameter 2 the sharper cap applies and
    a surviving pair must be adjacent.  ``diam`` may be passed precomputed.
    """
    if params.degree6_total_max is None:
        raise ValueError("profile does not define a degree-6 census")
    six = tuple(v for v in range(g.n) if g.degree(v) == 6)
    count = len(six)
    if count > params.degree6_total_max:
        return CensusResult(False, count, six, {"count": count, "vertices": list(six)})
    if diam is None:
        diam = graph_diameter(g) if g.n else None
    if diam == 2 and params.degree6_diam2_max is not None:
        if count > params.degree6_diam2_max:
            return CensusResult(False, count, six, {"count": count, "vertices": list(six)})
        if count == 2 and not g.has_edge(six[0], six[1]):
            return CensusResult(False, count, six, {"non_adjacent_pair": list(six)})
    return CensusResult(True, count, six, None)


@dataclass(frozen=True)
class PartitionCheck:
    applicable: bool
    ok: bool
    violations: tuple[str, ...]
    profile: PartitionProfile | None


def partition_constraints_ok(
    g: Graph,
    v: int,
    params: TargetParams,
    diam: int | float | None = None,
) -> PartitionCheck:
    """Partition clauses for one vertex: applicable when v has degree 6, the
    graph has the profile order and diameter 2."""
    g.check_vertex(v)
    if params.h21_window is None:
        return PartitionCheck(False, True, (), None)
    if g.n != params.order or g.degree(v) != 6:
        return PartitionCheck(False, True, (), None)
    if diam is None:
        diam = graph_diameter(g)
    if diam != 2:
        return PartitionCheck(False, True, (), None)
    profile = neighborhood_partition(g, v)
    violations = []
    if profile.count(0) != 0:
        violations.append(f"{profile.count(0)} outside vertices share no neighbour with {v}")
    deep = sorted(k for k, _ in profile.counts if k >= 4)
    if deep:
        violations.append(f"outside vertices with {deep} common neighbours exist")
    lo, hi = params.h21_window
    if not lo <= profile.count(1) <= hi:
        violations.append(f"count of single-common-neighbour vertices {profile.count(1)} outside [{lo}, {hi}]")
    res = residual(g, v)
    deg8 = sum(1 for u in range(res.graph.n) if res.graph.degree(u) == 8)
    lo, hi = params.residual_degree8_window
    if not lo <= deg8 <= hi:
        violations.append(f"count of residual degree-8 vertices {deg8} outside [{lo}, {hi}]")
    lo, hi = params.boundary_edge_window
    if not lo <= profile.boundary_edges <= hi:
        violations.append(f"boundary edge count {profile.boundary_edges} outside [{lo}, {hi}]")
    return PartitionCheck(True, not violations, tuple(violations), profile)


@dataclass(frozen=True)
class LayerCheck:
    applicable: bool
    ok: bool
    layer_sizes: tuple[int, ...]
    violations: tuple[str, ...]


def layer_size_ok(g: Graph, v: int, params: TargetParams) -> LayerCheck:
    """Distance-layer windows for one vertex: applicable when v has degree 4
    and the graph has the profile order."""
    g.check_vertex(v)
    if params.layer2_window is None or params.layer3_window is None:
        return LayerCheck(False, True, (), ())
    if g.n != params.order or g.degree(v) != 4:
        return LayerCheck(False, True, (), ())
    profile = distance_layers(g, v)
    violations = []
    lo, hi = params.layer2_window
    if not lo <= profile.size(2) <= hi:
        violations.append(f"{profile.size(2)} vertices at distance 2, outside [{lo}, {hi}]")
    lo, hi = params.layer3_window
    if not lo <= profile.size(3) <= hi:
        violations.append(f"{profile.size(3)} vertices at distance 3, outside [{lo}, {hi}]")
    beyond = profile.unreachable + sum(profile.layer_sizes[4:])
    if beyond:
        violations.append(f"{beyond} vertices beyond distance 3")
    return LayerCheck(True, not violations, profile.layer_sizes, tuple(violations))


@dataclass(frozen=True)
class ConnectivityCheck:
    applicable: bool
    ok: bool
    kappa: int | None
    min_degree: int | None


def connectivity_clauses_ok(g: Graph, params: TargetParams, diam: int | float | None = None) -> ConnectivityCheck:
    """Vertex connectivity at least the profile minimum and equal to the
    minimum degree; for profiles that demand it, only at diameter 2."""
    if params.connectivity_min is None or g.n != params.order:
        return ConnectivityCheck(False, True, None, None)
    if params.connectivity_requires_diam2:
        if diam is None:
            diam = graph_diameter(g)
        if diam != 2:
            return ConnectivityCheck(False, True, None, None)
    kappa = vertex_connectivity(g)
    delta = min(g.degrees())
    ok = kappa >= params.connectivity_min and kappa == delta
    return ConnectivityCheck(True, ok, kappa, delta)


@dataclass(frozen=True)
class CutCheck:
    status: str  # pass / fail / budget-exceeded
    witness: dict | None


def smallest_cut_is_neighborhood(
    g: Graph,
    mode: str = "witness",
    budget: int = 10_000_000,
) -> CutCheck:
    """Is a minimum vertex cut realised by an open neighbourhood?

    Witness mode asks for one vertex whose neighbourhood is a minimum cut;
    exhaustive mode demands that every minimum cut is some neighbourhood,
    scanning all subsets of size kappa unless that count exceeds the budget.
    """
    if mode not in ("witness", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    kappa = vertex_connectivity(g)
    if mode == "witness":
        for v in range(g.n):
            if g.degree(v) == kappa and g.n - 1 - kappa >= 1:
                return CutCheck("pass", {"vertex": v, "cut": sorted(bit_indices(g.rows[v]))})
        return CutCheck("fail", {"kappa": kappa})
    total = comb(g.n, kappa)
    if total > budget:
        return CutCheck("budget-exceeded", {"subsets": total, "budget": budget})
    neighborhoods = {g.rows[v] for v in range(g.n)}
    for subset in itertools.combinations(range(g.n), kappa):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if not _connected_after_removal(g, mask):
            if mask not in neighborhoods:
                return CutCheck("fail", {"cut": list(subset)})
    return CutCheck("pass", {"kappa": kappa})


def _connected_after_removal(g: Graph, removed: int) -> bool:
    rest = g.full_mask & ~removed
    if rest == 0:
        return True
    start = rest & -rest
    seen = start
    frontier = start
    while frontier:
        reach = 0
        for u in bit_indices(frontier):
            reach |= g.rows[u]
        frontier = reach & rest & ~seen
        seen |= frontier
    return seen == rest


# -- the aggregated report -----------------------------------------------


@dataclass(frozen=True)
class Clause:
    id: str
    statement: str
    verdict: str
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class CriticalityReport:
    params: TargetParams
    graph_order: int
    graph_size: int
    clauses: tuple[Clause, ...]
    overall: str
    schema_version: int = SCHEMA_VERSION

    def clause(self, clause_id: str) -> Clause:
        for c in self.clauses:
            if c.id == clause_id:
                return c
        raise KeyError(clause_id)

    def as_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "profile": self.params.as_dict(),
            "graph": {"order": self.graph_order, "size": self.graph_size},
            "clauses": [c.as_dict() for c in self.clauses],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


def _jsonable_diam(diam: int | float | None):
    if diam is None:
        return None
    return "infinite" if diam == math.inf else int(diam)


def full_report(
    g: Graph,
    params: TargetParams,
    strict: bool = False,
    cut_mode: str = "witness",
    cut_budget: int = 10_000_000,
    skip: frozenset[str] | set[str] = frozenset(),
) -> CriticalityReport:
    """Evaluate the whole clause ledger against one graph.

    Clauses are computed independently of each other, in a fixed order, and
    each settles to pass, fail, not-applicable, budget-exceeded or error.
    ``skip`` removes clauses from the ledger entirely (used to demonstrate
    clause independence).  Overall verdict: pass iff no clause fails.
    """
    n = g.n
    degs = g.degrees()
    order_matches = n == params.order
    diam: int | float | None = None
    if n >= 1:
        diam = graph_diameter(g)

    clauses: list[Clause] = []

    def add(clause_id: str, statement: str, build) -> None:
        if clause_id in skip:
            return
        try:
            verdict, witness = build()
        except Exception as exc:  # surfaced in the ledger, never raised
            verdict, witness = VERDICT_ERROR, {"error": str(exc)}
        clauses.append(Clause(clause_id, statement, verdict, witness))

    def gate(enabled: bool, reason: str, build):
        def wrapped():
            if not order_matches:
                return (VERDICT_NA, {"reason": "graph order differs from the profile order"})
            if not enabled:
                return (VERDICT_NA, {"reason": reason})
            return build()

        return wrapped

    # 1. core two-colouring obstruction
    def ramsey_core():
        check = is_ramsey_graph(g, params.clique_bound, params.independence_bound)
        if check.ok:
            return (VERDICT_PASS, None)
        witness = {}
        if check.clique_witness is not None:
            witness["clique"] = list(check.clique_witness)
        if check.independent_set_witness is not None:
            witness["independent_set"] = list(check.independent_set_witness)
        return (VERDICT_FAIL, witness)

    add(
        "ramsey-core",
        f"no clique on {params.clique_bound} vertices and no independent set on "
        f"{params.independence_bound} vertices",
        ramsey_core,
    )

    # 2. order
    add(
        "order",
        f"graph has exactly {params.order} vertices",
        lambda: (VERDICT_PASS, None) if order_matches else (VERDICT_FAIL, {"order": n}),
    )

    # 3. degree window
    def degree_window():
        lo, hi = params.degree_window
        for v in range(n):
            if not lo <= degs[v] <= hi:
                return (VERDICT_FAIL, {"vertex": v, "degree": degs[v]})
        return (VERDICT_PASS, None)

    add(
        "degree-window",
        f"every degree lies in {_window(params.degree_window)}",
        gate(params.degree_window is not None, "no degree window in this profile", degree_window),
    )

    # 4. edge window
    def edge_window():
        lo, hi = params.edge_window
        e = g.edge_count
        if lo <= e <= hi:
            return (VERDICT_PASS, None)
        return (VERDICT_FAIL, {"edge_count": e})

    add(
        "edge-window",
        f"edge count lies in {_window(params.edge_window)}",
        gate(params.edge_window is not None, "no edge window in this profile", edge_window),
    )

    # 5. diameter window
    def diameter_window():
        lo, hi = params.diameter_window
        if diam is not None and diam != math.inf and lo <= diam <= hi:
            return (VERDICT_PASS, None)
        return (VERDICT_FAIL, {"diameter": _jsonable_diam(diam)})

    add(
        "diameter-window",
        f"diameter lies in {_window(params.diameter_window)}",
        gate(params.diameter_window is not None, "no diameter window in this profile", diameter_window),
    )

    # 6. enough degree-9 vertices
    def degree9_count():
        count = sum(1 for d in degs if d == 9)
        if count >= params.min_degree9_count:
            return (VERDICT_PASS, None)
        return (VERDICT_FAIL, {"count": count})

    add(
        "degree9-count",
        f"at least {params.min_degree9_count} vertices of degree 9",
        gate(params.min_degree9_count is not None, "no degree-9 floor in this profile", degree9_count),
    )

    # 7. neighbour degree sums
    def degree_sum_pair():
        ok, witness = degree_sum_pair_ok(g, params.neighbor_degree_sum_threshold)
        if ok:
            return (VERDICT_PASS, None)
        v, u, w = witness
        return (VERDICT_FAIL, {"vertex": v, "neighbors": [u, w], "degree_sum": degs[u] + degs[w]})

    add(
        "degree-sum-pair",
        f"no vertex has two neighbours whose degrees sum to "
        f"{params.neighbor_degree_sum_threshold} or less",
        gate(
            params.neighbor_degree_sum_threshold is not None,
            "no neighbour degree-sum threshold in this profile",
            degree_sum_pair,
        ),
    )

    # 8. degree-6 census
    def census():
        result = degree6_census_ok(g, params, diam=diam)
        if result.ok:
            return (VERDICT_PASS, None)
        return (VERDICT_FAIL, result.witness)

    add(
        "degree6-census",
        f"at most {params.degree6_total_max} vertices of degree 6; at diameter 2 "
        f"at most {params.degree6_diam2_max}, and a surviving pair is adjacent",
        gate(params.degree6_total_max is not None, "no degree-6 census in this profile", census),
    )

    # 9. neighbourhood partition constraints per degree-6 vertex
    def partition_clause():
        if diam != 2:
            return (VERDICT_NA, {"reason": "diameter is not 2"})
        six = [v for v in range(n) if degs[v] == 6]
        if not six:
            return (VERDICT_NA, {"reason": "no degree-6 vertices"})
        for v in six:
            check = partition_constraints_ok(g, v, params, diam=diam)
            if check.applicable and not check.ok:
                return (
                    VERDICT_FAIL,
                    {
                        "vertex": v,
                        "violations": list(check.violations),
                        "profile": check.profile.as_dict() if check.profile else None,
                    },
                )
        return (VERDICT_PASS, {"vertices": six})

    add(
        "partition-constraints",
        "for each degree-6 vertex at diameter 2: outside vertices share 1..3 "
        "neighbours with it, 20..24 share exactly one, 20..24 have outside "
        "degree 8, and 44..48 edges leave its neighbourhood",
        gate(params.h21_window is not None, "no partition windows in this profile", partition_clause),
    )

    # 10. strict exclusion of outside degree-6 vertices
    def strict_exclusion():
        if not strict:
            return (VERDICT_NA, {"reason": "strict mode disabled"})
        if diam != 2:
            return (VERDICT_NA, {"reason": "diameter is not 2"})
        six = [v for v in range(n) if degs[v] == 6]
        if not six:
            return (VERDICT_NA, {"reason": "no degree-6 vertices"})
        for v in six:
            inside = g.rows[v] | 1 << v
            outside_six = [u for u in six if u != v and not inside >> u & 1]
            if outside_six:
                return (VERDICT_FAIL, {"vertex": v, "outside_degree6": outside_six})
        return (VERDICT_PASS, {"vertices": six})

    add(
        "residual-degree6-exclusion",
        "no degree-6 vertex lies outside the closed neighbourhood of another "
        "degree-6 vertex (strict sharpening)",
        gate(params.degree6_total_max is not None, "no degree-6 census in this profile", strict_exclusion),
    )

    # 11. connectivity
    def connectivity():
        check = connectivity_clauses_ok(g, params, diam=diam)
        if not check.applicable:
            return (VERDICT_NA, {"reason": "diameter is not 2"})
        if check.ok:
            return (VERDICT_PASS, {"kappa": check.kappa, "min_degree": check.min_degree})
        return (VERDICT_FAIL, {"kappa": check.kappa, "min_degree": check.min_degree})

    add(
        "connectivity",
        f"vertex connectivity at least {params.connectivity_min} and equal to the minimum degree",
        gate(params.connectivity_min is not None, "no connectivity floor in this profile", connectivity),
    )

    # 12. pairwise neighbourhood unions
    def union_clause():
        ok, witness = union_neighborhood_ok(g, params.union_neighborhood_bound)
        if ok:
            return (VERDICT_PASS, None)
        v, u, w = witness
        return (
            VERDICT_FAIL,
            {"vertex": v, "neighbors": [u, w], "union_size": (g.rows[u] | g.rows[w]).bit_count()},
        )

    add(
        "union-neighborhood",
        f"any two neighbours of a common vertex jointly cover at least "
        f"{params.union_neighborhood_bound} vertices [unproven]",
        gate(
            params.union_neighborhood_bound is not None,
            "no union-neighbourhood bound in this profile",
            union_clause,
        ),
    )

    # 13. distance layers per degree-4 vertex
    def layers_clause():
        four = [v for v in range(n) if degs[v] == 4]
        if not four:
            return (VERDICT_NA, {"reason": "no degree-4 vertices"})
        for v in four:
            check = layer_size_ok(g, v, params)
            if check.applicable and not check.ok:
                return (
                    VERDICT_FAIL,
                    {"vertex": v, "layer_sizes": list(check.layer_sizes), "violations": list(check.violations)},
                )
        return (VERDICT_PASS, {"vertices": four})

    add(
        "layer-sizes",
        "every degree-4 vertex has 19..24 vertices at distance 2, 11..17 at "
        "distance 3, and none farther",
        gate(params.layer2_window is not None, "no layer windows in this profile", layers_clause),
    )

    # 14. degree-6 vertices inside one neighbourhood
    def neighborhood_degree6():
        if diam != 2:
            return (VERDICT_NA, {"reason": "diameter is not 2"})
        for v in range(n):
            inside = [u for u in bit_indices(g.rows[v]) if degs[u] == 6]
            if len(inside) > params.neighborhood_degree6_max:
                return (VERDICT_FAIL, {"vertex": v, "degree6_neighbors": inside})
        return (VERDICT_PASS, None)

    add(
        "neighborhood-degree6",
        f"at diameter 2, every neighbourhood contains at most "
        f"{params.neighborhood_degree6_max} degree-6 vertices",
        gate(
            params.neighborhood_degree6_max is not None,
            "no neighbourhood degree-6 cap in this profile",
            neighborhood_degree6,
        ),
    )

    # 15. minimum cuts realised by neighbourhoods
    def smallest_cut():
        if diam != 2:
            return (VERDICT_NA, {"reason": "diameter is not 2"})
        check = smallest_cut_is_neighborhood(g, mode=cut_mode, budget=cut_budget)
        if check.status == "pass":
            return (VERDICT_PASS, check.witness)
        if check.status == "budget-exceeded":
            return (VERDICT_BUDGET, check.witness)
        return (VERDICT_FAIL, check.witness)

    add(
        "smallest-cut-neighborhood",
        "some minimum vertex cut is the open neighbourhood of a vertex",
        gate(params.smallest_cut_check, "no smallest-cut clause in this profile", smallest_cut),
    )

    overall = VERDICT_FAIL if any(c.verdict == VERDICT_FAIL for c in clauses) else VERDICT_PASS
    return CriticalityReport(
        params=params,
        graph_order=n,
        graph_size=g.edge_count,
        clauses=tuple(clauses),
        overall=overall,
    )
