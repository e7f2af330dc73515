"""Tools for Harris graphs: tough, Eulerian, non-Hamiltonian graphs.

The package verifies the defining properties with exact exhaustive
algorithms, enumerates the complete catalog of small orders, detects and
rewrites barnacles, and builds larger Harris graphs by grafting, flowering,
and three named infinite families.
"""

from .barnacles import (
    Barnacle,
    BarnacleDiagnostics,
    BarnacleError,
    find_barnacles,
    grow_barnacle,
    is_barnacle_free,
    simplify_all,
    simplify_barnacle,
)
from .canonical import (
    CANONICAL_MAX_N,
    CanonicalError,
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
)
from .constructions import (
    ConstructionError,
    W5Subdivision,
    flower,
    graft,
    graft_edge_candidates,
    subdivide_edge_by_w5,
)
from .core import (
    DegreeSequence,
    Graph,
    GraphError,
    MAX_VERTICES,
    build_graph,
    components_after_removal,
    degree_sequence,
    from_adjacency,
    is_connected,
    is_two_connected,
    relabel,
)
from .enumeration import (
    CensusCheckpoint,
    CensusResult,
    CheckpointError,
    EnumerationError,
    census_degree_histogram,
    enumerate_even_connected,
    enumerate_harris,
    resume,
)
from .families import (
    FamilyError,
    LabeledFamilyState,
    hirotaka_base,
    hirotaka_step,
    justine,
    shaw_base,
    shaw_step,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6_lines
from .properties import (
    CeilingError,
    HamiltonicityVerdict,
    HarrisVerdict,
    JungResult,
    ToughnessVerdict,
    find_hamiltonian_cycle,
    is_eulerian,
    is_harris,
    is_tough,
    jung_shortcut,
    sigma2,
    validate_cycle,
)

__version__ = "0.1.0"

__all__ = [
    "Barnacle",
    "BarnacleDiagnostics",
    "BarnacleError",
    "CANONICAL_MAX_N",
    "CanonicalError",
    "CanonicalForm",
    "CeilingError",
    "CensusCheckpoint",
    "CensusResult",
    "CheckpointError",
    "ConstructionError",
    "DegreeSequence",
    "EnumerationError",
    "FamilyError",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HamiltonicityVerdict",
    "HarrisVerdict",
    "JungResult",
    "LabeledFamilyState",
    "MAX_VERTICES",
    "ToughnessVerdict",
    "W5Subdivision",
    "are_isomorphic",
    "build_graph",
    "canonical_form",
    "canonical_graph",
    "census_degree_histogram",
    "components_after_removal",
    "degree_sequence",
    "emit_graph6",
    "enumerate_even_connected",
    "enumerate_harris",
    "find_barnacles",
    "find_hamiltonian_cycle",
    "flower",
    "from_adjacency",
    "graft",
    "graft_edge_candidates",
    "grow_barnacle",
    "hirotaka_base",
    "hirotaka_step",
    "is_barnacle_free",
    "is_connected",
    "is_eulerian",
    "is_harris",
    "is_tough",
    "is_two_connected",
    "justine",
    "jung_shortcut",
    "parse_graph6",
    "read_graph6_lines",
    "relabel",
    "resume",
    "shaw_base",
    "shaw_step",
    "sigma2",
    "simplify_all",
    "simplify_barnacle",
    "subdivide_edge_by_w5",
    "validate_cycle",
]
