"""Certified numerical-radius enclosures and operator inequality checks."""

from .linalg import (
    ConvergenceError,
    DomainError,
    NotHermitianError,
    abs_left,
    abs_right,
    adjoint,
    apply_herm_fn,
    cartesian_decomp,
    herm_eigen,
    m_min,
    operator_norm,
)
from .radius import (
    EnclosureNotReached,
    RadiusConfig,
    RadiusEstimate,
    herm_envelope,
    numerical_radius,
    radius_refine,
    radius_sample_oracle,
    radius_sweep,
)
from .bounds import (
    BoundReport,
    ChainReport,
    CatalogEntry,
    FunctionPair,
    HypothesisFailed,
    IdentityCheckError,
    MatrixContext,
    NotPositiveError,
    catalog_list,
    evaluate,
    eval_bound_KIT,
    eval_bound_LEM1,
    eval_bound_T3,
    eval_bound_T3_printed,
    eval_bound_kit,
    eval_bound_lem1,
    eval_bound_t3,
    eval_bound_t3_printed,
    eval_chain_B0,
    eval_chain_COR,
    eval_chain_SQ,
    eval_chain_T1,
    eval_chain_T2,
    eval_chain_b0,
    eval_chain_cor,
    eval_chain_sq,
    eval_chain_t1,
    eval_chain_t2,
    eval_functional_chain,
    eval_lemma_norm_sum,
    eval_lemma_pos_diff,
    identity_pair,
    parse_bound_id,
    power_sqrt_pair,
)
from .ensembles import (
    FAMILIES,
    EnsembleSpec,
    StudyReport,
    StudyRow,
    generate,
    matrices,
    run_study,
    tightness_compare,
    to_csv,
    to_json,
)
from .matio import (
    MatrixFormatError,
    dumps_json_matrix,
    dumps_matrix_market,
    load_matrix,
    loads_json_matrix,
    loads_matrix_market,
    save_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CatalogEntry",
    "ChainReport",
    "ConvergenceError",
    "DomainError",
    "EnclosureNotReached",
    "EnsembleSpec",
    "FAMILIES",
    "FunctionPair",
    "HypothesisFailed",
    "IdentityCheckError",
    "MatrixContext",
    "MatrixFormatError",
    "NotHermitianError",
    "NotPositiveError",
    "RadiusConfig",
    "RadiusEstimate",
    "StudyReport",
    "StudyRow",
    "abs_left",
    "abs_right",
    "adjoint",
    "apply_herm_fn",
    "cartesian_decomp",
    "catalog_list",
    "dumps_json_matrix",
    "dumps_matrix_market",
    "eval_bound_KIT",
    "eval_bound_LEM1",
    "eval_bound_T3",
    "eval_bound_T3_printed",
    "eval_bound_kit",
    "eval_bound_lem1",
    "eval_bound_t3",
    "eval_bound_t3_printed",
    "eval_chain_B0",
    "eval_chain_COR",
    "eval_chain_SQ",
    "eval_chain_T1",
    "eval_chain_T2",
    "eval_chain_b0",
    "eval_chain_cor",
    "eval_chain_sq",
    "eval_chain_t1",
    "eval_chain_t2",
    "eval_functional_chain",
    "eval_lemma_norm_sum",
    "eval_lemma_pos_diff",
    "evaluate",
    "generate",
    "herm_eigen",
    "herm_envelope",
    "identity_pair",
    "load_matrix",
    "loads_json_matrix",
    "loads_matrix_market",
    "m_min",
    "matrices",
    "numerical_radius",
    "operator_norm",
    "parse_bound_id",
    "power_sqrt_pair",
    "radius_refine",
    "radius_sample_oracle",
    "radius_sweep",
    "run_study",
    "save_matrix",
    "tightness_compare",
    "to_csv",
    "to_json",
]
