"""Exact-arithmetic toolkit for length functions on the discrete
Heisenberg group and semidirect products Z^n x|_A Z."""

from .classify import ClassificationDossier, batch_classify, build_dossier
from .errors import (
    LengrpError,
    NumericalDegeneracyError,
    OracleExhausted,
    PreconditionError,
    ResourceExhausted,
)
from .groups import (
    BallTable,
    HeisElem,
    HeisenbergGroup,
    SdpContext,
    SdpElem,
    SdpGroup,
    bfs_ball,
    bfs_word_length,
    parse_heis,
    parse_sdp,
)
from .lengths import (
    AxiomReport,
    CoverageGap,
    HeisWordOracle,
    LengthEvaluator,
    StableLengthEstimate,
    blachere_word_length,
    ceil_two_sqrt,
    central_power_word_length,
    check_axioms,
    extend_rational,
    heis_word_length,
    quadratic_evaluator,
    quadratic_length,
    sqrt_bound_witness,
    stable_length_estimate,
    stable_norm_domination_check,
    swl_evaluator,
    swl_heisenberg,
    unit_eigen_seminorm,
    word_length_evaluator,
    zero_evaluator,
)
from .matrices import (
    IntMatrix,
    char_poly,
    finite_order,
    is_diagonalizable,
    minimal_poly,
    torsion_order_candidates,
)
from .polynomials import (
    IntPolynomial,
    half_trace_transform,
    has_unit_circle_eigenvalue,
    is_irreducible,
    self_reciprocal_part,
    squarefree_part,
    sturm_count,
)
from .spectral import SpectralReport, classify_sdp

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BallTable",
    "ClassificationDossier",
    "CoverageGap",
    "HeisElem",
    "HeisWordOracle",
    "HeisenbergGroup",
    "IntMatrix",
    "IntPolynomial",
    "LengrpError",
    "LengthEvaluator",
    "NumericalDegeneracyError",
    "OracleExhausted",
    "PreconditionError",
    "ResourceExhausted",
    "SdpContext",
    "SdpElem",
    "SdpGroup",
    "SpectralReport",
    "StableLengthEstimate",
    "batch_classify",
    "bfs_ball",
    "bfs_word_length",
    "blachere_word_length",
    "build_dossier",
    "ceil_two_sqrt",
    "central_power_word_length",
    "char_poly",
    "check_axioms",
    "classify_sdp",
    "extend_rational",
    "finite_order",
    "half_trace_transform",
    "has_unit_circle_eigenvalue",
    "heis_word_length",
    "is_diagonalizable",
    "is_irreducible",
    "minimal_poly",
    "parse_heis",
    "parse_sdp",
    "quadratic_evaluator",
    "quadratic_length",
    "self_reciprocal_part",
    "sqrt_bound_witness",
    "squarefree_part",
    "stable_length_estimate",
    "stable_norm_domination_check",
    "sturm_count",
    "swl_evaluator",
    "swl_heisenberg",
    "torsion_order_candidates",
    "unit_eigen_seminorm",
    "word_length_evaluator",
    "zero_evaluator",
]
