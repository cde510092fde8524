"""Exact cohomology dimensions for anticanonical and pluricanonical bundles
on Hirzebruch surfaces and on blow-ups of the projective plane at points,
with cross-checked closed formulas and deformation-family jump reports.

All arithmetic is exact: arbitrary-precision integers and rationals only.
"""

__version__ = "0.1.0"

from .blowup import (
    JetConditionMatrix,
    PointConfiguration,
    PointFileError,
    SamplingBudgetError,
    achievable_dims,
    generate_configuration,
    h0_blowup,
    h1_2K,
    jet_matrix,
    monomial_count,
    parse_point_file,
)
from .exact_linalg import RatMatrix, binomial, rank, vandermonde_det, vandermonde_matrix
from .family import (
    BlowupFamilyReport,
    FiberReportRow,
    KodairaFamily,
    fiber_surface,
    noninvariance_report_blowup,
    noninvariance_report_hirzebruch,
)
from .hirzebruch import (
    FormulaEvaluation,
    HirzebruchSurface,
    RegimeError,
    SectionBasisDescription,
    dim_enumerated,
    dim_formula,
    h1_pluricanonical_formula,
    section_basis,
)
from .surface_invariants import (
    SurfaceInvariants,
    h1_from_rr,
    h2_via_serre,
    invariants_blowup_p2,
    invariants_hirzebruch,
)

__all__ = [
    "BlowupFamilyReport",
    "FiberReportRow",
    "FormulaEvaluation",
    "HirzebruchSurface",
    "JetConditionMatrix",
    "KodairaFamily",
    "PointConfiguration",
    "PointFileError",
    "RatMatrix",
    "RegimeError",
    "SamplingBudgetError",
    "SectionBasisDescription",
    "SurfaceInvariants",
    "achievable_dims",
    "binomial",
    "dim_enumerated",
    "dim_formula",
    "fiber_surface",
    "generate_configuration",
    "h0_blowup",
    "h1_2K",
    "h1_from_rr",
    "h1_pluricanonical_formula",
    "h2_via_serre",
    "invariants_blowup_p2",
    "invariants_hirzebruch",
    "jet_matrix",
    "monomial_count",
    "noninvariance_report_blowup",
    "noninvariance_report_hirzebruch",
    "parse_point_file",
    "rank",
    "section_basis",
    "vandermonde_det",
    "vandermonde_matrix",
]
