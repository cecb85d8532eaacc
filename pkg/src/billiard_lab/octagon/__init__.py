"""正八角形と双曲線弧のテーブル（8周期点の線分）モジュール"""

from .audit import consistency_audit
from .construction import (
    arc_point,
    arc_window,
    asymptote_coordinates,
    build_table,
    eight_cycle,
    hyperbola_tangent_map,
    octagon_vertices,
    reflect_across_axis,
    sweep,
)
from .curve import HyperbolaArcCurve
from .exceptions import OctagonError, OutsideWindowError
from .schemas import (
    ArcAudit,
    AuditReport,
    CycleLine,
    EightCycle,
    HyperbolaArc,
    OctagonReport,
    OctagonSweep,
    OctagonTable,
)

__all__ = [
    "build_table",
    "octagon_vertices",
    "arc_window",
    "arc_point",
    "asymptote_coordinates",
    "hyperbola_tangent_map",
    "reflect_across_axis",
    "eight_cycle",
    "sweep",
    "consistency_audit",
    "HyperbolaArcCurve",
    "OctagonError",
    "OutsideWindowError",
    "ArcAudit",
    "AuditReport",
    "CycleLine",
    "EightCycle",
    "HyperbolaArc",
    "OctagonReport",
    "OctagonSweep",
    "OctagonTable",
]
