"""シンプレクティックビリヤードモジュール"""

from .billiard import (
    four_periodic_through,
    iterate_chords,
    outer_to_three_periodic,
    symplectic_map,
    symplectic_residual,
    three_periodic_to_outer,
)
from .ellipsoid import (
    characteristic_direction,
    complex_structure,
    ellipse_as_ellipsoid,
    four_periodic_through_2n,
    iterate_2n,
    load_ellipsoid,
    parse_ellipsoid,
    shape_matrix,
    symplectic_map_2n,
)
from .exceptions import (
    DegenerateChordError,
    NoAdmissibleImageError,
    NotClosedError,
    SymplecticBilliardError,
    TangentialChordError,
)
from .io import format_chord_csv, format_points_csv, write_symplectic_csv
from .schemas import ChordState, Ellipsoid2n, FourPeriodicCandidate, FourPeriodicCandidate2n

__all__ = [
    "symplectic_map",
    "symplectic_residual",
    "iterate_chords",
    "three_periodic_to_outer",
    "outer_to_three_periodic",
    "four_periodic_through",
    "symplectic_map_2n",
    "iterate_2n",
    "four_periodic_through_2n",
    "characteristic_direction",
    "complex_structure",
    "shape_matrix",
    "ellipse_as_ellipsoid",
    "parse_ellipsoid",
    "load_ellipsoid",
    "ChordState",
    "Ellipsoid2n",
    "FourPeriodicCandidate",
    "FourPeriodicCandidate2n",
    "SymplecticBilliardError",
    "NoAdmissibleImageError",
    "NotClosedError",
    "DegenerateChordError",
    "TangentialChordError",
    "format_chord_csv",
    "format_points_csv",
    "write_symplectic_csv",
]
