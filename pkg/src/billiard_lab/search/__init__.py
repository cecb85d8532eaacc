"""周期軌道探索モジュール"""

from .exceptions import SingularJacobianError
from .newton import NewtonResult, damped_newton, fd_jacobian, smallest_singular_value
from .orbits import (
    admissible_lift,
    circumscribed_vertices,
    cyclic_distance,
    find_orbits,
    midpoint_residual,
    newton_solve,
    orbit_from_thetas,
    orbits_through_tangency,
    solve_tangency,
    summarize,
    track_homotopy,
)
from .schemas import (
    SearchReport,
    SearchSummary,
    SymplecticOrbit,
    SymplecticSearchReport,
    TangencyVector,
)
from .symplectic_orbits import symplectic_find_orbits, symplectic_residual

__all__ = [
    "circumscribed_vertices",
    "midpoint_residual",
    "newton_solve",
    "solve_tangency",
    "orbit_from_thetas",
    "track_homotopy",
    "find_orbits",
    "orbits_through_tangency",
    "symplectic_find_orbits",
    "symplectic_residual",
    "summarize",
    "cyclic_distance",
    "admissible_lift",
    "damped_newton",
    "fd_jacobian",
    "smallest_singular_value",
    "NewtonResult",
    "TangencyVector",
    "SearchReport",
    "SearchSummary",
    "SymplecticOrbit",
    "SymplecticSearchReport",
    "SingularJacobianError",
]
