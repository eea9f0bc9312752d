"""Classical invariants of braids and Legendrian fronts, and the s#, s and g4 bounds they imply."""

__version__ = "0.1.0"

from .braid import (
    BraidWord,
    NotAKnotError,
    ParseError,
    Permutation,
    closure_permutation,
    component_count,
    conjugate,
    crossing_change,
    crossing_counts,
    is_knot_closure,
    mirror,
    parse_braid,
    positive_resolution,
    render_braid,
    self_linking,
    stabilize,
    torus_braid,
)
from .front import (
    FrontDiagram,
    OrientedFront,
    orient,
    parse_front,
    render_front,
    reverse_orientation,
    rotation_number,
    thurston_bennequin,
    transverse_pushoff_sl,
)
from .bounds import (
    Bound,
    BoundReport,
    CobordismData,
    TorusKnotInvariants,
    cobordism_propagate,
    crossing_change_interval,
    positive_braid_cobordism_check,
    resolution_bound_decomposition,
    s_tilde_relations,
    sharp_bound_from_braid,
    sharp_bound_from_front,
    torus_knot_invariants,
)
from .corpus import CorpusRecord, VerificationFinding, load_corpus, verify_corpus
