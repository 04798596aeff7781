"""Tight regular polyhedra of type {p, q}: closed-form classification,
brute-force verification, and combinatorial map construction.

A regular polyhedron with p-gonal faces and q-valent vertices has at least
2pq flags; the tight ones attain that bound.  This package classifies them
in closed form, independently reconstructs the classification by exhaustive
coset enumeration over the defining parameter grids, and materializes every
classified group as a flag map with validated polyhedron axioms.
"""

from .analysis import (
    SchlafliType,
    SggiReport,
    check_intersection_condition,
    check_sggi,
    is_tight,
    orientability,
    polyhedra_isomorphic,
    schlafli_type,
    sggi_report,
)
from .enumeration import (
    BACKEND,
    RegularRepresentation,
    element_order,
    enumerate_cosets,
    evaluate_word,
)
from .errors import (
    BoundExceededError,
    BudgetExceededError,
    InvalidKError,
    InvalidPresentationError,
    InvalidTypeError,
    LabelError,
    TightpolyError,
    TypeMismatchError,
    UnsupportedFormatError,
    VerificationFailureError,
)
from .families import (
    ClassRecord,
    EdgeSimpleSolution,
    ExistenceVerdict,
    NonOrientableParams,
    OrientableParams,
    classify_all,
    classify_nonorientable,
    classify_orientable,
    edge_simple_solutions,
    q_from_p_k,
    square_roots_of_unity,
    tight_existence,
)
from .maps import (
    MapInvariants,
    MapStructure,
    build_map,
    check_vertex_action,
    detect_multiple_edges,
    edge_multiplicity,
    export_map,
    face_walk,
    map_invariants,
    validate_polyhedron,
    vertex_labels,
)
from .oracle import (
    SweepReport,
    brute_force_nonorientable,
    brute_force_orientable,
    sweep_type,
    verify_range,
)
from .presentations import (
    Presentation,
    Word,
    coxeter_presentation,
    delta_presentation,
    dual_presentation,
    lambda_presentation,
    parse_presentation,
)
from .subgroups import (
    Subgroup,
    is_normal,
    subgroup_closure,
    subgroup_core,
    subgroup_index,
)

__version__ = "0.1.0"
