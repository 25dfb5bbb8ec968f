"""Hypergraph Ramsey toolkit: arrowing, gadget assembly, codegree forcing.

The package splits into five layers.  hypercore holds the immutable
hypergraph model, colorengine decides arrowing questions by complete
search, gadgets assembles senders and their derived machinery, codegree
carries the partition-host forcing and extension arguments, and
randomlab runs the seeded sampling experiments.  cli exposes all of it
as the ramsey3 command.
"""

from .colorengine import (
    ArrowVerdict,
    BudgetExceeded,
    CnfDocument,
    EdgeColoring,
    PatternSet,
    SearchResult,
    VertexColoring,
    admissible_patterns,
    admissible_vertex_coloring,
    arrows,
    check_free,
    export_cnf,
    find_free_coloring,
    is_minimal_ramsey,
    minimalize,
    solve_cnf,
)
from .hypercore import (
    Edge,
    GlueMap,
    GlueResult,
    Hypergraph,
    degree,
    disjoint_union,
    enumerate_cliques,
    fano_plane,
    from_json_dict,
    glue,
    induced,
    is_linear,
    link,
    min_ell_degree,
    min_positive_codegree,
    path_distance,
    to_json_dict,
)

__version__ = "0.1.0"

__all__ = [
    "ArrowVerdict",
    "BudgetExceeded",
    "CnfDocument",
    "Edge",
    "EdgeColoring",
    "GlueMap",
    "GlueResult",
    "Hypergraph",
    "PatternSet",
    "SearchResult",
    "VertexColoring",
    "admissible_patterns",
    "admissible_vertex_coloring",
    "arrows",
    "check_free",
    "degree",
    "disjoint_union",
    "enumerate_cliques",
    "export_cnf",
    "fano_plane",
    "find_free_coloring",
    "from_json_dict",
    "glue",
    "induced",
    "is_linear",
    "link",
    "min_ell_degree",
    "min_positive_codegree",
    "minimalize",
    "is_minimal_ramsey",
    "path_distance",
    "solve_cnf",
    "to_json_dict",
]
