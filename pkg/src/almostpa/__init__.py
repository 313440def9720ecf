"""almostpa: positive, alternating and almost alternating link diagrams.

Diagrams are PD codes (:mod:`almostpa.diagram`); tangles and Montesinos
links are assembled from planar fragments (:mod:`almostpa.tangle`,
:mod:`almostpa.montesinos`); the Kauffman bracket (:mod:`almostpa.bracket`)
certifies that every transformation keeps the link.
"""

from .laurent import LaurentPoly
from .diagram import (
    Diagram,
    DiagramError,
    alternating_status,
    connected_sum,
    parse_pd,
    positivity_status,
    reducedness,
    unknot,
)
from .bracket import BoundExceeded, jones_equal, kauffman_bracket, normalized_bracket
from .tangle import (
    RationalTangle,
    Tangle,
    TangleFraction,
    canonical_vector,
    denominator_closure,
    fraction_of,
    numerator_closure,
    parse_conway,
    tangle_diagram,
    tangle_sum,
)
from .orientation import TangleType, classify_type, consistent_orientations, lemma_sign_prediction, propagate
from .montesinos import (
    InvariantViolation,
    MarkedDiagram,
    MontesinosSpec,
    PreconditionError,
    UnsupportedSpec,
    almost_pa,
    build_standard,
    check_marked,
    decompose_infinity,
    normal_form,
    pa_to_almost_pa,
    route_of,
    verify_standard_alternating,
)
from .almost_alt import (
    SeparationViolation,
    build_test_instance,
    locate_frame,
    reduce_trivial,
    separate_and_untongue,
    trace_sequences,
)
from .render import to_svg

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "Diagram",
    "DiagramError",
    "alternating_status",
    "connected_sum",
    "parse_pd",
    "positivity_status",
    "reducedness",
    "unknot",
    "BoundExceeded",
    "jones_equal",
    "kauffman_bracket",
    "normalized_bracket",
    "RationalTangle",
    "Tangle",
    "TangleFraction",
    "canonical_vector",
    "denominator_closure",
    "fraction_of",
    "numerator_closure",
    "parse_conway",
    "tangle_diagram",
    "tangle_sum",
    "TangleType",
    "classify_type",
    "consistent_orientations",
    "lemma_sign_prediction",
    "propagate",
    "InvariantViolation",
    "MarkedDiagram",
    "MontesinosSpec",
    "PreconditionError",
    "UnsupportedSpec",
    "almost_pa",
    "build_standard",
    "check_marked",
    "decompose_infinity",
    "normal_form",
    "pa_to_almost_pa",
    "route_of",
    "verify_standard_alternating",
    "SeparationViolation",
    "build_test_instance",
    "locate_frame",
    "reduce_trivial",
    "separate_and_untongue",
    "trace_sequences",
    "to_svg",
]
