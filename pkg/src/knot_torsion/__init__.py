"""Reidemeister-torsion polynomials of 1/n-surgeries on (2p,q)-torus knots."""

from .chebyshev import IntPoly, cheb_T, even_part_as_poly, exact_divide
from .errors import (
    DegenerateDenominator,
    InexactDivision,
    InvalidPair,
    NonAcyclicRep,
    NonCoprime,
    NonOdd,
    NonPositive,
    OddTermPresent,
    ParameterError,
    PrecisionExhausted,
    SizeMismatch,
    TorsionError,
    UnsupportedKnot,
)
from .realpoly import RealPoly
from .recurrence import (
    RecurrenceReport,
    d_poly,
    sigma_by_recurrence,
    verify_three_term,
    x_relation_holds,
)
from .surgery import (
    RepClass,
    SurgeryParams,
    TraceTriple,
    count_ab_pairs,
    enumerate_acyclic,
    trace_triple,
    validate_params,
)
from .torsion_polynomial import (
    Method,
    SigmaResult,
    check_degree,
    check_normalization,
    johnson_sigma_bar,
    root_multiset_check,
    sigma,
    sigma_oracle,
    x_poly,
    y_factor,
)
from .torsion_values import (
    CConstant,
    TorsionTable,
    c_constant,
    inverse_torsion_multiset,
    lemma44_check,
    torsion_table,
    torsion_value,
)

__version__ = "0.1.0"
