"""FastAPI application exposing the screening toolkit.

All graph input travels as graph6 text.  Single-graph endpoints reject a bad
line with HTTP 400; the batch /analyze endpoint records the error per item and
keeps going, so one corrupt line cannot sink a whole batch.
"""

from __future__ import annotations

import hashlib
from datetime import datetime, timezone

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..constraints import (
    TargetParams,
    custom,
    full_report,
    neighborhood_partition,
    profile_by_name,
    smallest_cut_is_neighborhood,
)
from ..enumeration import (
    audit_printed_rows,
    degseq_solutions,
    diam2_deg6_sequences,
    gammav_contributions,
    nv_contributions,
    partition_triples,
    regenerate_tables,
)
from ..graphs import (
    Graph,
    GraphFormatError,
    circulant,
    cycle_graph,
    distance_layers,
    parse_graph6,
    petersen,
    to_graph6,
)
from ..invariants import invariant_summary, is_ramsey_graph, verify_r39_critical
from . import schemas

TOOL_NAME = "ramseycheck"


def _parse(line: str) -> Graph:
    try:
        return parse_graph6(line)
    except GraphFormatError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _resolve_profile(spec: schemas.ProfileSpec) -> TargetParams:
    if spec.name == "custom":
        if spec.s is None or spec.t is None or spec.n is None:
            raise HTTPException(
                status_code=400,
                detail="custom profile needs s, t and n",
            )
        return custom(spec.s, spec.t, spec.n)
    try:
        return profile_by_name(spec.name)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def input_digest(line: str) -> str:
    return hashlib.sha256(line.strip().encode("ascii", "replace")).hexdigest()


def _envelope(line: str, report) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": __version__,
        "input_digest": input_digest(line),
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "report": report.as_dict(),
    }


def create_app() -> FastAPI:
    app = FastAPI(title=TOOL_NAME, version=__version__)

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> dict:
        return {"status": "ok", "tool": TOOL_NAME, "version": __version__}

    @app.post("/analyze", response_model=schemas.AnalyzeResponse)
    def analyze(req: schemas.AnalyzeRequest) -> dict:
        params = _resolve_profile(req.profile)
        if req.cut_mode not in ("witness", "exhaustive"):
            raise HTTPException(status_code=400, detail="cut_mode must be witness or exhaustive")
        results = []
        all_pass = True
        had_errors = False
        for index, line in enumerate(req.graphs):
            try:
                g = parse_graph6(line)
            except GraphFormatError as exc:
                results.append({"index": index, "graph6": line, "error": str(exc)})
                had_errors = True
                all_pass = False
                continue
            report = full_report(
                g,
                params,
                strict=req.strict,
                cut_mode=req.cut_mode,
                cut_budget=req.cut_budget,
            )
            if report.overall != "pass":
                all_pass = False
            results.append(
                {"index": index, "graph6": line, "envelope": _envelope(line, report)}
            )
        return {"results": results, "all_pass": all_pass, "had_errors": had_errors}

    @app.post("/invariants", response_model=schemas.InvariantsResponse)
    def invariants(req: schemas.GraphRequest) -> dict:
        g = _parse(req.graph)
        if g.n == 0:
            raise HTTPException(status_code=400, detail="graph has no vertices")
        return invariant_summary(g).as_dict()

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> dict:
        g = _parse(req.graph)
        if req.kind == "ramsey":
            check = is_ramsey_graph(g, req.s, req.t)
            return {
                "ok": check.ok,
                "kind": "ramsey",
                "clique_witness": check.clique_witness,
                "independent_set_witness": check.independent_set_witness,
            }
        if req.kind == "r39":
            result = verify_r39_critical(g)
            return {"ok": result["ok"], "kind": "r39", "checks": result["checks"]}
        raise HTTPException(status_code=400, detail="kind must be ramsey or r39")

    @app.post("/degseq", response_model=schemas.DegseqResponse)
    def degseq(req: schemas.DegseqRequest) -> dict:
        solutions = degseq_solutions(req.n, req.e, req.d6)
        return {
            "n": req.n,
            "e": req.e,
            "d6": req.d6,
            "solutions": [list(s.tuple4) for s in solutions],
        }

    @app.get("/tables", response_model=schemas.TablesResponse)
    def tables(
        e_min: int = Query(default=172),
        e_max: int = Query(default=184),
        d6_min: int = Query(default=0),
        d6_max: int = Query(default=6),
    ) -> dict:
        cells = []
        for (e, d6), rows in sorted(regenerate_tables().items()):
            if e_min <= e <= e_max and d6_min <= d6 <= d6_max:
                cells.append(
                    {"e": e, "d6": d6, "sequences": [list(r.tuple4) for r in rows]}
                )
        return {"cells": cells}

    @app.get("/tables/audit", response_model=schemas.AuditResponse)
    def tables_audit(flagged_only: bool = Query(default=False)) -> dict:
        rows = []
        flagged = 0
        for diag in audit_printed_rows():
            if not diag.ok:
                flagged += 1
            if flagged_only and diag.ok:
                continue
            rows.append(
                {
                    "table_id": diag.row.table_id,
                    "e": diag.row.e,
                    "printed": list(diag.row.tuple4),
                    "checksum_order": diag.checksum_order,
                    "checksum_edges": diag.checksum_edges,
                    "correction": list(diag.correction) if diag.correction else None,
                }
            )
        return {"rows": rows, "flagged": flagged}

    @app.get("/partition-triples", response_model=schemas.TriplesResponse)
    def triples() -> dict:
        return {
            "triples": [
                {
                    "h21": t.h21,
                    "h22": t.h22,
                    "h23": t.h23,
                    "boundary_edges": t.boundary_edges,
                }
                for t in partition_triples()
            ]
        }

    @app.get("/contributions/closed-neighborhood", response_model=schemas.ContributionsResponse)
    def closed_neighborhood_contributions(
        boundary_edges: int = Query(ge=44, le=48),
    ) -> dict:
        tuples = nv_contributions(boundary_edges)
        return {"tuples": [t.__dict__ for t in tuples]}

    @app.get("/contributions/residual", response_model=schemas.ContributionsResponse)
    def residual_contributions(
        degree_sum: int = Query(ge=302, le=306),
        strict: bool = Query(default=False),
    ) -> dict:
        tuples = gammav_contributions(degree_sum, strict=strict)
        return {"tuples": [t.__dict__ for t in tuples]}

    @app.get("/sequences/diam2-degree6", response_model=schemas.SequencesResponse)
    def diam2_sequences(strict: bool = Query(default=False)) -> dict:
        return {
            "sequences": [list(s.tuple4) for s in diam2_deg6_sequences(strict=strict)]
        }

    @app.post("/layers", response_model=schemas.LayersResponse)
    def layers(req: schemas.LayersRequest) -> dict:
        g = _parse(req.graph)
        if not 0 <= req.vertex < g.n:
            raise HTTPException(status_code=400, detail=f"vertex {req.vertex} out of range")
        profile = distance_layers(g, req.vertex)
        return {
            "vertex": req.vertex,
            "layer_sizes": list(profile.layer_sizes),
            "unreachable": profile.unreachable,
        }

    @app.post("/partition", response_model=schemas.PartitionResponse)
    def partition(req: schemas.PartitionRequest) -> dict:
        g = _parse(req.graph)
        if not 0 <= req.vertex < g.n:
            raise HTTPException(status_code=400, detail=f"vertex {req.vertex} out of range")
        profile = neighborhood_partition(g, req.vertex)
        return {
            "vertex": req.vertex,
            "counts": {str(k): v for k, v in profile.counts},
            "boundary_edges": profile.boundary_edges,
            "residual_order": profile.residual_order,
        }

    @app.post("/generate", response_model=schemas.GenerateResponse)
    def generate(req: schemas.GenerateRequest) -> dict:
        if req.kind == "petersen":
            g = petersen()
        elif req.kind == "r39":
            # the unique order-35 triangle-free graph with independence
            # number 8, as the circulant C35(1, 7, 11, 16)
            g = circulant(35, (1, 7, 11, 16))
        elif req.kind == "cycle":
            if req.n is None or req.n < 3:
                raise HTTPException(status_code=400, detail="cycle needs n >= 3")
            g = cycle_graph(req.n)
        elif req.kind == "circulant":
            if req.n is None or not req.offsets:
                raise HTTPException(status_code=400, detail="circulant needs n and offsets")
            try:
                g = circulant(req.n, req.offsets)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from exc
        else:
            raise HTTPException(status_code=400, detail=f"unknown kind {req.kind!r}")
        return {"graph6": to_graph6(g)}

    @app.post("/cut-check", response_model=schemas.CutResponse)
    def cut_check(req: schemas.CutRequest) -> dict:
        g = _parse(req.graph)
        if req.mode not in ("witness", "exhaustive"):
            raise HTTPException(status_code=400, detail="mode must be witness or exhaustive")
        check = smallest_cut_is_neighborhood(g, mode=req.mode, budget=req.budget)
        return {"status": check.status, "witness": check.witness}

    return app


app = create_app()
