"""Sieved Jacobi OPUC, Laurent polynomials and Dunkl operators."""

from ._core import (
    ArgumentError,
    CheckDetail,
    CheckReport,
    ConsistencyError,
    DomainError,
    DunklOperator,
    Eigenvalues,
    H,
    H_hat,
    H_tilde,
    JacobiParams,
    K,
    L,
    LaurentPoly,
    P,
    PlanError,
    Q,
    SymmetryError,
    UnsupportedComposition,
    ValidityError,
    Y,
    Y_tilde,
    h_norm,
    phi,
    psi,
    psi_case,
    run_suite,
    suite_names,
    verblunsky,
    weight_rho_N,
)

__all__ = [name for name in dir() if not name.startswith("_")]
