"""Executable parity and reflection identities."""

from .registry import (
    CONSISTENCY_TOL,
    IDENTITIES,
    PARITY_TOL,
    REFLECTION_TOL,
    RELATION_OFFSET,
    ConsistencyRecord,
    IdentityDef,
    ParamPoint,
    Reduction,
    ResidualRecord,
    SampledPoints,
    SamplingConfig,
    build_parity_lhs,
    build_parity_rhs,
    check_point,
    example_consistency,
    get_identity,
    identity_residual,
    reduce_parity_combination,
    select_identities,
    suite_points,
)

__all__ = [
    "CONSISTENCY_TOL",
    "IDENTITIES",
    "PARITY_TOL",
    "REFLECTION_TOL",
    "RELATION_OFFSET",
    "ConsistencyRecord",
    "IdentityDef",
    "ParamPoint",
    "Reduction",
    "ResidualRecord",
    "SampledPoints",
    "SamplingConfig",
    "build_parity_lhs",
    "build_parity_rhs",
    "check_point",
    "example_consistency",
    "get_identity",
    "identity_residual",
    "reduce_parity_combination",
    "select_identities",
    "suite_points",
]
