"""Penta- and tridiagonal linear solvers: direct, exact, SIP and Hotelling-Bodewig variants."""

from ._bandix import (
    SolverError,
    bench,
    exact_det,
    exact_solve,
    generate,
    method_ids,
    solve,
    verify_complexity,
)

__all__ = [
    "SolverError",
    "bench",
    "exact_det",
    "exact_solve",
    "generate",
    "method_ids",
    "solve",
    "verify_complexity",
]
