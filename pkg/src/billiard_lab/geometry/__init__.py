"""曲線幾何モジュール"""

from .curve import (
    ConvexCurve,
    CurveModel,
    as_point,
    to_vec2,
    unit_normal,
    unit_tangent,
)
from .exceptions import CurveSpecError, GeometryError, ParallelTangentsError, PointInsideBodyError
from .loader import load_curve, parse_curve_spec
from .schemas import (
    BoundaryPoint,
    CircleSpec,
    CurveKind,
    CurveSpec,
    EllipseSpec,
    SupportFourierSpec,
    Vec2,
)

__all__ = [
    "CurveModel",
    "ConvexCurve",
    "as_point",
    "to_vec2",
    "unit_normal",
    "unit_tangent",
    "load_curve",
    "parse_curve_spec",
    "BoundaryPoint",
    "CircleSpec",
    "EllipseSpec",
    "SupportFourierSpec",
    "CurveSpec",
    "CurveKind",
    "Vec2",
    "GeometryError",
    "CurveSpecError",
    "PointInsideBodyError",
    "ParallelTangentsError",
]
