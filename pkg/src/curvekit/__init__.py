"""curvekit: combinatorial curves on punctured surfaces.

Normal-coordinate curves on ideal triangulations, exact geometric
intersection numbers, finite slices of curve graphs, pants
decompositions with their adjacency graphs, and a verification harness
for candidate curve-graph isomorphisms.
"""

from .cutting import (NONOUTER_SEPARATING, NONSEPARATING, OUTER,
                      classify_separation, cut_along, cut_along_detailed,
                      homology_mod2)
from .errors import (EscapesUniverseError, InsufficientDataError,
                     ResourceLimitError)
from .graphs import (GraphSlice, are_isomorphic, complement_graph,
                     connected_components, is_cut_vertex, to_dot,
                     to_json_adjacency)
from .harness import (CandidateIso, ExhaustionDescriptor, ExhaustionStage,
                      boundary_match, check_restriction, check_simplicial_iso,
                      failed_checks, full_report, induced_iso,
                      validate_exhaustion, verify_invariant_preservation)
from .mapping import (MappingClass, load_mapping_classes,
                      random_mapping_class, triangulation_symmetries)
from .normal import (NormalCurve, enclosing_vector, is_admissible,
                     trace_components, validate_normal, vertex_links)
from .overlay import are_disjoint, intersection_number, multicurve_is_disjoint
from .pants import (AdjacencyGraph, PantsDecomposition, PantsSurvey,
                    adjacency_graph, adjacency_witness, bounds_pair_of_pants,
                    classify_simplicial, enumerate_pants_decompositions,
                    genus_capture_multicurve, is_pants_decomposition_simplicial,
                    is_pants_decomposition_topological,
                    is_peripheral_pair_simplicial, is_peripheral_pair_topological)
from .surface import SurfaceType, ambient
from .triangulation import (Triangulation, four_punctured_sphere,
                            genus_two_one_puncture, once_punctured_torus,
                            punctured_sphere, twice_punctured_torus)
from .universe import CurveUniverse, enumerate_vectors

__version__ = "0.1.0"

__all__ = [
    "AdjacencyGraph", "CandidateIso", "CurveUniverse",
    "EscapesUniverseError", "ExhaustionDescriptor", "ExhaustionStage",
    "GraphSlice", "InsufficientDataError", "MappingClass",
    "NONOUTER_SEPARATING", "NONSEPARATING", "NormalCurve", "OUTER",
    "PantsDecomposition", "PantsSurvey", "ResourceLimitError",
    "SurfaceType", "Triangulation", "__version__", "adjacency_graph",
    "adjacency_witness", "ambient", "are_disjoint", "are_isomorphic",
    "boundary_match", "bounds_pair_of_pants", "check_restriction",
    "check_simplicial_iso", "classify_separation", "classify_simplicial",
    "complement_graph", "connected_components", "cut_along",
    "cut_along_detailed", "enclosing_vector", "enumerate_pants_decompositions",
    "enumerate_vectors", "failed_checks", "four_punctured_sphere",
    "full_report", "genus_capture_multicurve", "genus_two_one_puncture",
    "homology_mod2", "induced_iso", "intersection_number", "is_admissible",
    "is_cut_vertex", "is_pants_decomposition_simplicial",
    "is_pants_decomposition_topological", "is_peripheral_pair_simplicial",
    "is_peripheral_pair_topological", "load_mapping_classes",
    "multicurve_is_disjoint", "once_punctured_torus", "punctured_sphere",
    "random_mapping_class", "to_dot", "to_json_adjacency",
    "trace_components", "triangulation_symmetries", "twice_punctured_torus",
    "validate_exhaustion", "validate_normal", "verify_invariant_preservation",
    "vertex_links",
]
