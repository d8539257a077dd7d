"""Toolkit for structural screening of triangle-free Ramsey graph candidates.

The package answers two kinds of question:

* does a given graph satisfy every structural condition that a
  (3,10)-critical graph on 40 or 41 vertices has to satisfy, and
* what are all degree-sequence classes, neighbourhood partitions and
  contribution tuples compatible with the defining equations.

All checks are necessary conditions only; a passing report never certifies
criticality.
"""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    GraphFormatError,
    InducedSubgraph,
    LayerProfile,
    circulant,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    distance_layers,
    edges_between,
    from_edges,
    neighborhood,
    parse_graph6,
    petersen,
    residual,
    to_graph6,
)
from .invariants import (
    CONSTANTS,
    InvariantSummary,
    edge_connectivity,
    has_clique,
    has_independent_set,
    independence_number,
    invariant_summary,
    is_ramsey_graph,
    mantel_check,
    max_independent_set,
    vertex_connectivity,
    verify_r39_critical,
)
from .constraints import (
    CriticalityReport,
    PartitionProfile,
    TargetParams,
    custom,
    full_report,
    gamma41,
    neighborhood_partition,
    omega40,
    profile_by_name,
    smallest_cut_is_neighborhood,
)
from .enumeration import (
    DegreeSequenceClass,
    audit_printed_rows,
    degseq_solutions,
    diam2_deg6_sequences,
    gammav_contributions,
    nv_contributions,
    partition_triples,
    regenerate_tables,
)
