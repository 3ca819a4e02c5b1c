"""Meshless solver for spatiotemporal fractional diffusion problems.

Thin wrapper over the C++ core: special functions, quadrature rules, and the
benchmark cases exposed by the command line tool.
"""

from ._core import (
    RunConfig,
    convergence_study,
    gauss_jacobi,
    list_cases,
    mittag_leffler,
    run_case,
)

__all__ = [
    "RunConfig",
    "convergence_study",
    "gauss_jacobi",
    "list_cases",
    "mittag_leffler",
    "run_case",
]
