"""Coloring spaces and coloring quivers of (p,2)-torus links over dihedral quandles."""

from .colorings import (
    Coloring,
    ColoringSpace,
    check_congruence,
    counting_invariant,
    enumerate_colorings,
    predicted_count,
)
from .export import (
    JoinShape,
    UnclassifiedShape,
    UniformCompleteShape,
    VerificationReport,
    classify_shape,
    coloring_space_from_json,
    quiver_from_json,
    report_from_json,
    to_dot,
    to_json,
    verify,
)
from .presentations import (
    GeneratorIndexError,
    PresentationError,
    PresentationParseError,
    QuandlePresentation,
    UnknownGeneratorError,
    is_torus_presentation,
    parse_presentation,
    serialize_presentation,
    torus_p2_presentation,
)
from .quandles import (
    AxiomError,
    FiniteQuandle,
    Hom,
    HomSet,
    compose,
    dihedral_endos,
    enumerate_homs,
    homs_from_images,
    identity_hom,
    is_endomorphism,
    make_dihedral,
    make_from_table,
)
from .quivers import (
    CompositeNotInSpaceError,
    HypothesisNotMetError,
    JoinDecomposition,
    NotAJoinError,
    Quiver,
    QuiverTooLargeError,
    QuiverVertex,
    are_isomorphic,
    build_quiver,
    canonical_form,
    is_uniform_complete,
    join_decompose,
    predicted_quiver,
)

__version__ = "0.1.0"
