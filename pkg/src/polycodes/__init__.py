"""Binary codes from the face structure of simple polytopes.

Vertex-facet incidences give binary codes spanned by face indicator
vectors; the package computes these codes, checks the structure results
that govern them (colorability criteria, dimension laws, duality and
self-duality, doubly-evenness), screens code parameters for polytope
realizability, and cross-checks everything it can two ways.
"""

from .constructors import (
    Recipe,
    cube,
    dual_cyclic_5_7,
    parse_recipe,
    polygon,
    prism,
    product,
    segment,
    simplex,
    vertex_cut,
)
from .corpus import CorpusEntry, corpus
from .errors import (
    BudgetExceeded,
    GenericityFailure,
    Inapplicable,
    InvalidInput,
    InvalidPolytope,
    TheoremViolation,
    Undefined,
    Unrealized,
)
from .facecodes import (
    ColorabilityReport,
    Coloring,
    DimensionLaw,
    DoublyEvenReport,
    FaceCode,
    ScreenRule,
    ScreenVerdict,
    SelfDualReport,
    circ_closure_check,
    code_matrix,
    colorability_report,
    coloring_is_proper,
    dimension_law_check,
    doubly_even_report,
    duality_complement_check,
    face_code,
    find_coloring,
    mallows_sloane,
    min_distance_bound_check,
    realizability_screen,
    reed_muller_check,
    self_duality_report,
)
from .gf2 import (
    ENUMERATION_CAP,
    BitVector,
    LinearCode,
    SelfDualityTrace,
    WeightEnumerator,
    distance,
    dual_code,
    format_matrix,
    inner,
    is_self_dual,
    min_distance,
    parse_matrix,
    reduce,
    reed_muller,
    weight_enumerator,
)
from .morse import (
    HeightFunction,
    extract_basis,
    generic_height,
    height_from_objective,
    index_histogram,
    vertex_indices,
)
from .polytope import (
    Face,
    FHVectors,
    OutwardMap,
    SimplePolytope,
    check_incidence,
    edges,
    face_indicator,
    faces_of_codim,
    fh_vectors,
    incidence_isomorphic,
    is_even,
    outward_neighbor_map,
    polytope_from_json,
    polytope_to_json,
    skeleton_connected,
    validate,
    vertex_neighbors,
)
from .smallcover import (
    InvolutionReport,
    VectorColoring,
    admits_regular_m_involution,
    component_count,
    lift_coloring,
    validate_characteristic,
    vector_coloring_from_json,
    vector_coloring_to_json,
)
from .verify import CheckResult, SUITES, corpus_subjects, run_suite

__version__ = "0.1.0"

__all__ = [
    "BitVector",
    "BudgetExceeded",
    "CheckResult",
    "ColorabilityReport",
    "Coloring",
    "CorpusEntry",
    "DimensionLaw",
    "DoublyEvenReport",
    "ENUMERATION_CAP",
    "Face",
    "FaceCode",
    "FHVectors",
    "GenericityFailure",
    "HeightFunction",
    "Inapplicable",
    "InvalidInput",
    "InvalidPolytope",
    "InvolutionReport",
    "LinearCode",
    "OutwardMap",
    "Recipe",
    "SUITES",
    "ScreenRule",
    "ScreenVerdict",
    "SelfDualReport",
    "SelfDualityTrace",
    "SimplePolytope",
    "TheoremViolation",
    "Undefined",
    "Unrealized",
    "VectorColoring",
    "WeightEnumerator",
    "admits_regular_m_involution",
    "check_incidence",
    "circ_closure_check",
    "code_matrix",
    "colorability_report",
    "coloring_is_proper",
    "component_count",
    "corpus",
    "corpus_subjects",
    "cube",
    "dimension_law_check",
    "distance",
    "doubly_even_report",
    "dual_code",
    "dual_cyclic_5_7",
    "duality_complement_check",
    "edges",
    "extract_basis",
    "face_code",
    "face_indicator",
    "faces_of_codim",
    "fh_vectors",
    "find_coloring",
    "format_matrix",
    "generic_height",
    "height_from_objective",
    "incidence_isomorphic",
    "index_histogram",
    "inner",
    "is_even",
    "is_self_dual",
    "lift_coloring",
    "mallows_sloane",
    "min_distance",
    "min_distance_bound_check",
    "outward_neighbor_map",
    "parse_matrix",
    "parse_recipe",
    "polygon",
    "polytope_from_json",
    "polytope_to_json",
    "prism",
    "product",
    "realizability_screen",
    "reduce",
    "reed_muller",
    "reed_muller_check",
    "run_suite",
    "segment",
    "self_duality_report",
    "simplex",
    "skeleton_connected",
    "validate",
    "validate_characteristic",
    "vector_coloring_from_json",
    "vector_coloring_to_json",
    "vertex_cut",
    "vertex_indices",
    "vertex_neighbors",
    "weight_enumerator",
]
