"""外部ビリヤードモジュール"""

from .billiard import (
    build_orbit,
    circle_map_oracle,
    compare_monodromy,
    conjugate_to_frame,
    frame_matrix,
    iterate,
    iterate_point,
    local_differential,
    monodromy_analytic,
    monodromy_numeric,
    orbit_angles,
    orbit_frame,
    orbit_from_points,
    outer_map,
    outer_map_inverse,
    rotation,
    shear,
    tangency_polygon,
)
from .exceptions import (
    DegeneratePolygonError,
    NotPeriodicError,
    OrbitNotClosedError,
    OuterBilliardError,
)
from .io import (
    format_table,
    orbit_table,
    read_orbit_csv,
    table_points,
    trajectory_table,
    write_orbit_csv,
)
from .schemas import (
    FrameDescriptor,
    MonodromyComparison,
    OrbitAngles,
    OrbitTable,
    OuterOrbit,
    OuterStep,
    TangencyPolygon,
)

__all__ = [
    "outer_map",
    "outer_map_inverse",
    "iterate",
    "iterate_point",
    "local_differential",
    "frame_matrix",
    "orbit_angles",
    "orbit_from_points",
    "build_orbit",
    "orbit_frame",
    "monodromy_analytic",
    "monodromy_numeric",
    "conjugate_to_frame",
    "compare_monodromy",
    "circle_map_oracle",
    "tangency_polygon",
    "rotation",
    "shear",
    "trajectory_table",
    "orbit_table",
    "format_table",
    "write_orbit_csv",
    "read_orbit_csv",
    "table_points",
    "OuterStep",
    "OuterOrbit",
    "OrbitAngles",
    "OrbitTable",
    "FrameDescriptor",
    "MonodromyComparison",
    "TangencyPolygon",
    "OuterBilliardError",
    "DegeneratePolygonError",
    "OrbitNotClosedError",
    "NotPeriodicError",
]
