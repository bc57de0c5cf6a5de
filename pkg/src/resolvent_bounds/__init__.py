"""Resolvent norm bounds for matrix contractions with prescribed spectrum."""
from .bounds import (
    BoundReport,
    Witness,
    bound_prop2,
    bound_prop5,
    bound_theorem1,
    bound_theorem3,
    certify_sharpness_theorem1,
    ds_constant_bound,
    ds_constant_sup,
    random_contraction_audit,
    sup_resolvent_R,
    xnorm_with_method,
)
from .chareq import (
    RootCensus,
    count_trig_roots,
    lemma_case,
    root_census,
    scan_trig_roots,
    solve_char_eq,
    solve_cosh_branches,
    xnorm_char_eq,
    xnorm_limit_gap,
)
from .disk import (
    BlaschkeProduct,
    Spectrum,
    blaschke_eval,
    d1_sigmabar_zeta,
    dist_to_spectrum,
    pseudo_hyp_dist,
    stolz_s,
)
from .errors import *  # noqa: F403
from .model import block_model_resolvent, extremal_T_star, model_matrix, model_resolvent
from .toeplitz import (
    ExtremalParams,
    appendix_det_identity,
    build_X,
    hankel_flip,
    xnorm_limit,
    xnorm_oracle,
    xnorm_upper_bound,
)

__version__ = "0.1.0"
