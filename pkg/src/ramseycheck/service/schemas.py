"""Request and response models for the HTTP surface."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    tool: str
    version: str


class ProfileSpec(BaseModel):
    """Screening profile selector; custom profiles carry their own (s, t, n)."""

    name: str = "gamma41"
    s: int | None = Field(default=None, description="clique bound for custom profiles")
    t: int | None = Field(default=None, description="independence bound for custom profiles")
    n: int | None = Field(default=None, description="graph order for custom profiles")


class AnalyzeRequest(BaseModel):
    graphs: list[str] = Field(description="graph6 lines, analyzed in order")
    profile: ProfileSpec = ProfileSpec()
    strict: bool = Field(default=False, description="apply the strict degree-6 exclusion clause")
    cut_mode: str = Field(default="witness", description="witness or exhaustive minimum-cut search")
    cut_budget: int = Field(default=10_000_000, ge=1)


class ClauseModel(BaseModel):
    id: str
    statement: str
    verdict: str
    witness: dict | None = None


class ReportModel(BaseModel):
    schema_version: int
    profile: dict
    graph: dict
    clauses: list[ClauseModel]
    overall: str


class EnvelopeModel(BaseModel):
    """Versioned wrapper around one report, keyed by the input digest."""

    tool: str
    version: str
    input_digest: str
    timestamp: str
    report: ReportModel


class AnalyzeItem(BaseModel):
    index: int
    graph6: str
    error: str | None = None
    envelope: EnvelopeModel | None = None


class AnalyzeResponse(BaseModel):
    results: list[AnalyzeItem]
    all_pass: bool
    had_errors: bool


class GraphRequest(BaseModel):
    graph: str = Field(description="one graph6 line")


class InvariantsResponse(BaseModel):
    order: int
    size: int
    min_degree: int
    max_degree: int
    is_regular: bool
    independence_number: int
    vertex_connectivity: int
    edge_connectivity: int
    diameter: int | str


class VerifyRequest(BaseModel):
    graph: str
    kind: str = Field(default="ramsey", description="'ramsey' or 'r39'")
    s: int = 3
    t: int = 10


class VerifyResponse(BaseModel):
    ok: bool
    kind: str
    checks: dict[str, bool] | None = None
    clique_witness: list[int] | None = None
    independent_set_witness: list[int] | None = None


class DegseqRequest(BaseModel):
    n: int = Field(ge=0)
    e: int = Field(ge=0)
    d6: int = Field(ge=0)


class DegseqResponse(BaseModel):
    n: int
    e: int
    d6: int
    solutions: list[list[int]]


class TableCell(BaseModel):
    e: int
    d6: int
    sequences: list[list[int]]


class TablesResponse(BaseModel):
    cells: list[TableCell]


class AuditRow(BaseModel):
    table_id: int
    e: int
    printed: list[int]
    checksum_order: bool
    checksum_edges: bool
    correction: list[int] | None = None


class AuditResponse(BaseModel):
    rows: list[AuditRow]
    flagged: int


class TripleModel(BaseModel):
    h21: int
    h22: int
    h23: int
    boundary_edges: int


class TriplesResponse(BaseModel):
    triples: list[TripleModel]


class ContributionModel(BaseModel):
    a: int
    b: int
    c: int
    d: int
    scope: str
    driver: int


class ContributionsResponse(BaseModel):
    tuples: list[ContributionModel]


class SequencesResponse(BaseModel):
    sequences: list[list[int]]


class LayersRequest(BaseModel):
    graph: str
    vertex: int = 0


class LayersResponse(BaseModel):
    vertex: int
    layer_sizes: list[int]
    unreachable: int


class PartitionRequest(BaseModel):
    graph: str
    vertex: int = 0


class PartitionResponse(BaseModel):
    vertex: int
    counts: dict[str, int]
    boundary_edges: int
    residual_order: int


class GenerateRequest(BaseModel):
    kind: str = Field(description="'cycle', 'circulant', 'petersen' or 'r39'")
    n: int | None = None
    offsets: list[int] | None = None


class GenerateResponse(BaseModel):
    graph6: str


class CutRequest(BaseModel):
    graph: str
    mode: str = "witness"
    budget: int = Field(default=10_000_000, ge=1)


class CutResponse(BaseModel):
    status: str
    witness: dict | None = None
