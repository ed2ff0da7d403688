"""Dense mixed graphs of diameter 2 from biaffine planes over GF(q)."""
from .construction import biaffine, g_qt, kautz_mixed
from .errors import (
    CertificateFailure,
    DegreeTooSmall,
    DivisionByZero,
    EvenQ,
    MalformedFile,
    NotPrimePower,
    TOutOfRange,
    VertexNotFound,
)
from .gf import FieldSpec, ShiftSets, field_new, random_shift_sets, shift_sets
from .graph import (
    DegreeTriple,
    Line,
    MixedGraph,
    Point,
    degrees,
    diameter,
    distance,
    distance_matrix,
    is_mixed_moore,
    is_mixed_regular,
    undirected_girth,
)
from .moore import (
    best_upper_bound,
    bosak_feasible,
    defect_t0,
    directed_moore_bound,
    feasibility_table,
    mixed_moore_bound,
    parity_excludes,
    undirected_moore_bound,
)
from .symmetry import (
    is_automorphism,
    is_isomorphic,
    orbits,
    psi,
    refine,
    theta,
    transitivity_certificate,
)

__version__ = "0.1.0"
