"""Exact analysis of rank-metric codes: matrix (Delsarte) and vector
(Gabidulin) codes, their duals, rank distributions and defects."""

from .codes import (
    CodeClass,
    CodeReport,
    DistributionQuery,
    RankDistribution,
    analyze,
    check_defect_one_duality,
    closed_form_mrd_qmrd,
    complete_distribution,
    dim1_dual_distribution,
    dim_formula_check,
    dual_distance_via_weights,
    generalized_weights,
    macwilliams_transform,
    min_distance,
    qmrd_dual_criterion,
    rank_distribution,
)
from .constructions import build_mrd, build_qmrd, example_exdualqmrd, random_code
from .field import ExtensionBasis, FiniteField, ext_coords, ext_uncoords, extension, field_make
from .gabidulin import GabidulinCode, check_serie, expand, gab_analyze, gab_dual, moore_generator, vector_rank
from .matspace import (
    MatrixCode,
    Subspace,
    code_intersect,
    code_sum,
    dual_code,
    mat_of_subspace,
    mat_rank,
    restrict,
    subspace_dual,
    trace_product,
)
from .qcalc import alternating_partial_sum, gaussian, pascal_matrix_pair, verify_gaussian_identities

__version__ = "0.1.0"

__all__ = [
    "CodeClass",
    "CodeReport",
    "DistributionQuery",
    "ExtensionBasis",
    "FiniteField",
    "GabidulinCode",
    "MatrixCode",
    "RankDistribution",
    "Subspace",
    "alternating_partial_sum",
    "analyze",
    "build_mrd",
    "build_qmrd",
    "check_defect_one_duality",
    "check_serie",
    "closed_form_mrd_qmrd",
    "code_intersect",
    "code_sum",
    "complete_distribution",
    "dim1_dual_distribution",
    "dim_formula_check",
    "dual_code",
    "dual_distance_via_weights",
    "example_exdualqmrd",
    "expand",
    "ext_coords",
    "ext_uncoords",
    "extension",
    "field_make",
    "gab_analyze",
    "gab_dual",
    "gaussian",
    "generalized_weights",
    "macwilliams_transform",
    "mat_of_subspace",
    "mat_rank",
    "min_distance",
    "moore_generator",
    "pascal_matrix_pair",
    "qmrd_dual_criterion",
    "random_code",
    "rank_distribution",
    "restrict",
    "subspace_dual",
    "trace_product",
    "vector_rank",
    "verify_gaussian_identities",
]
