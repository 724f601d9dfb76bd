"""Edge-contraction stability for graphs defined by forbidden induced subgraphs.

The package answers four families of questions about small simple graphs:

* which graphs contract onto a given pattern (splitting expansions),
* when freeness from a pattern family survives every edge contraction,
* which graphs are contraction-critical for a family, with generators
  for the known critical classes,
* whether the recorded characterizations hold on every small graph,
  checked exhaustively by the claim registry in :mod:`contractfree.claims`.

Graphs are immutable, use graph6 for interchange, and are bounded at
twelve vertices; everything here targets desk-scale exhaustive checks,
not asymptotic performance.
"""

from .claims import (
    REGISTRY,
    RunContext,
    VerificationReport,
    verify,
)
from .enumeration import (
    GraphSpace,
    SpaceCache,
    brute_force_classes,
    brute_force_counts,
    enumerate_graphs,
)
from .families import (
    FIGURE_IDS,
    FigureMember,
    complete_bipartite,
    complete_graph,
    corpus_text,
    cycle_graph,
    figure_family,
    figure_graphs,
    is_pseudo_split,
    is_split,
    is_threshold,
    named,
    path_graph,
)
from .graphs import (
    MAXN,
    ContractionResult,
    Graph,
    Graph6Error,
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    complement,
    contract,
    corner_dominated,
    disjoint_union,
    induced,
    is_isomorphic,
    neighborhood,
    parse_graph6,
    permuted,
    write_graph6,
)
from .hfree import (
    CharacterizationResult,
    CriticalEdgeQuery,
    Family,
    SplitSpec,
    characterization_check,
    contract_subset,
    elementary,
    exists_induced,
    family_from_lines,
    family_to_lines,
    find_induced,
    free_splits,
    is_almost_dominating,
    is_critically_h_exist,
    is_h_critical_for,
    is_h_critical_in,
    is_h_free,
    is_strongly_h_free,
    splitting_family,
    splitting_graph,
    splitting_one,
    splitting_vertex,
    unique_2k2_criticality_check,
)

__version__ = "0.1.0"

__all__ = [
    "MAXN",
    "Graph",
    "Graph6Error",
    "ContractionResult",
    "parse_graph6",
    "write_graph6",
    "contract",
    "induced",
    "complement",
    "disjoint_union",
    "permuted",
    "neighborhood",
    "corner_dominated",
    "is_isomorphic",
    "automorphism_orbits",
    "canonical_form",
    "canonical_graph",
    "Family",
    "SplitSpec",
    "CriticalEdgeQuery",
    "CharacterizationResult",
    "exists_induced",
    "find_induced",
    "is_h_free",
    "elementary",
    "family_to_lines",
    "family_from_lines",
    "splitting_one",
    "splitting_vertex",
    "splitting_graph",
    "splitting_family",
    "free_splits",
    "is_strongly_h_free",
    "is_critically_h_exist",
    "contract_subset",
    "is_h_critical_for",
    "is_h_critical_in",
    "is_almost_dominating",
    "characterization_check",
    "unique_2k2_criticality_check",
    "named",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite",
    "FigureMember",
    "FIGURE_IDS",
    "figure_graphs",
    "figure_family",
    "corpus_text",
    "is_split",
    "is_pseudo_split",
    "is_threshold",
    "GraphSpace",
    "SpaceCache",
    "enumerate_graphs",
    "brute_force_classes",
    "brute_force_counts",
    "VerificationReport",
    "RunContext",
    "REGISTRY",
    "verify",
]
