"""Exact Schubert calculus, quantum cohomology of Grassmannians, and
conformal-blocks divisor degrees on moduli of stable rational curves."""

from .partitions import (
    Box,
    ColumnCondition,
    Partition,
    column_condition,
    dual_in_box,
    num_rows,
    partition,
    split_first_column,
    star_dual,
    transpose,
    weight,
)
from .schur import (
    SchurExpansion,
    generalized_lr,
    grassmannian_intersection,
    lr_coefficient,
    multiply_schur,
)
from .quantum import (
    QExpansion,
    Reduced,
    quantum_classical_identity,
    quantum_lr_coefficient,
    quantum_multiply,
    rim_hook_reduce,
    three_point_gw,
)
from .flags import (
    FlagShape,
    PairOfPartitions,
    factorized_intersection,
    flag_intersection,
    grassmann_perm,
    level_d_perm,
    pair_factorization,
    perm_from_pair,
)
from .gw import (
    gw_column_factorization,
    gw_divisor_degree_m04,
    gw_dot_fcurve,
    gw_invariant_d1,
)
from .cb import (
    CbBundle,
    cb_c1_degree_m04,
    cb_dot_fcurve,
    cb_rank,
    conformal_weight,
    critical_identity,
    critical_level,
    dual_weight,
    newwitten_rank,
    transpose_symmetry_check,
)
from .moduli import (
    DivisorVector,
    FCurve,
    divisor_vector,
    enumerate_fcurves,
    fcurve,
)
from .verify import (
    Certificate,
    SearchStatus,
    SweepReport,
    addrow_identity,
    family_degree_one,
    nonvanishing_certificate,
    reduction_consistency,
    sweep_conjecture,
)

__version__ = "0.1.0"
