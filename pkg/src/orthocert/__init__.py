"""Exact machinery for independent sets of the hypercube orthogonality graph.

Construction and verification of extremal independent sets, exact
distance-algebra checks, a brute-force solver for small dimensions and a
mechanical rank certificate matching the construction size at powers of two.
"""

from .bose_mesner import (
    ExactRationalMatrix,
    SpectralReport,
    distance_matrix,
    projection_entry,
    projection_matrix,
    ratio_bound,
    spectral_check,
    spectral_identities,
)
from .certificate import (
    CertificateReport,
    Gf2Matrix,
    admissible_distances,
    build_restricted_X,
    certify,
    family_rank_bound,
    gf2_rank,
    krawtchouk_expand,
    mod2_identity_check,
    phi_eval,
    phi_eval_rational,
)
from .combinatorics import (
    KrawtchoukTable,
    binom,
    binom_mod2,
    krawtchouk,
    krawtchouk_table,
)
from .construction import (
    ExtremalSetSpec,
    a_n,
    build_extremal_set,
    chromatic_lower_bound,
)
from .errors import (
    CertificationError,
    ConsistencyError,
    DimensionMismatch,
    GuardExceeded,
    InadmissibleDistance,
    OrthocertError,
    RatioBoundVoid,
    SetFileError,
)
from .exact_solver import max_independent_set, max_independent_set_parity_class
from .hypercube import (
    FamilySplit,
    VerificationResult,
    Vertex,
    VertexSet,
    distance_spectrum,
    hamming,
    is_edge,
    read_set_file,
    split_truncate,
    verify_independent,
    verify_independent_sampled,
    write_set_file,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CertificateReport",
    "CertificationError",
    "ConsistencyError",
    "DimensionMismatch",
    "ExactRationalMatrix",
    "ExtremalSetSpec",
    "FamilySplit",
    "Gf2Matrix",
    "GuardExceeded",
    "InadmissibleDistance",
    "KrawtchoukTable",
    "OrthocertError",
    "RatioBoundVoid",
    "SetFileError",
    "SpectralReport",
    "VerificationResult",
    "Vertex",
    "VertexSet",
    "a_n",
    "admissible_distances",
    "binom",
    "binom_mod2",
    "build_extremal_set",
    "build_restricted_X",
    "certify",
    "chromatic_lower_bound",
    "distance_matrix",
    "distance_spectrum",
    "family_rank_bound",
    "gf2_rank",
    "hamming",
    "is_edge",
    "krawtchouk",
    "krawtchouk_expand",
    "krawtchouk_table",
    "max_independent_set",
    "max_independent_set_parity_class",
    "mod2_identity_check",
    "phi_eval",
    "phi_eval_rational",
    "projection_entry",
    "projection_matrix",
    "ratio_bound",
    "read_set_file",
    "spectral_check",
    "spectral_identities",
    "split_truncate",
    "verify_independent",
    "verify_independent_sampled",
    "write_set_file",
]
