"""Exact GIT stability computations for quintic surfaces in P^3."""

__version__ = "0.1.0"

from .lattice import (  # noqa: E402
    ExponentVector,
    InternalInconsistency,
    InvalidArgument,
    MonomialConfiguration,
    OneParamSubgroup,
    enumerate_monomials,
    nonneg_set,
    zero_set,
)
from .critical import Kind, enumerate_critical, verify_completeness  # noqa: E402
from .stability import TorusVerdict, analyze, hull_membership, torus_verdict  # noqa: E402

__all__ = [
    "ExponentVector",
    "InternalInconsistency",
    "InvalidArgument",
    "Kind",
    "MonomialConfiguration",
    "OneParamSubgroup",
    "TorusVerdict",
    "analyze",
    "enumerate_critical",
    "enumerate_monomials",
    "hull_membership",
    "nonneg_set",
    "torus_verdict",
    "verify_completeness",
    "zero_set",
]
