"""Relativistic Fermi-Dirac integrals F_q(eta, beta) and the standard F_q(eta)."""

from ._fdrel import (  # noqa: F401
    Config,
    ConvergenceError,
    DomainError,
    EvalResult,
    FdrelError,
    Method,
    UsageError,
    a_coeffs,
    auto_method,
    fd_rel,
    fd_std,
    fhat,
    method_name,
    quad_fd_rel,
)


def fd_rel_value(q, eta, beta, method=Method.Auto, config=None):
    """Just the number."""
    return fd_rel(q, eta, beta, method, config or Config()).value
