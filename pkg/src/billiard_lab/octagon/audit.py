"""八角形テーブルの整合性監査"""
import logging
import math

import numpy as np

from .construction import arc_window
from .curve import HyperbolaArcCurve, cross2
from .schemas import ArcAudit, AuditReport, OctagonTable

logger = logging.getLogger(__name__)

TANGENT_TOL = 1e-12
SYMMETRY_TOL = 1e-9
SECTOR_WIDTH = math.pi / 4.0


def _relative_angle(p: np.ndarray, centre: float) -> float:
    a = math.atan2(p[1], p[0]) - centre
    return math.pi - (math.pi - a) % (2.0 * math.pi)


def consistency_audit(table: OctagonTable, samples: int = 257) -> AuditReport:
    """弧の角度範囲の重なり、z_i での接線、曲率の符号、π/4 回転対称性を確認

    各弧の角度範囲は弧の中心角 (2i−1)π/8 からの相対角。隣り合う弧は
    hi_i − lo_{i+1} >= π/4 のとき重なる。
    """
    rotation = np.array(
        [[math.cos(SECTOR_WIDTH), -math.sin(SECTOR_WIDTH)],
         [math.sin(SECTOR_WIDTH), math.cos(SECTOR_WIDTH)]]
    )
    curves = [HyperbolaArcCurve(arc) for arc in table.arcs]
    violations: list[str] = []
    audits: list[ArcAudit] = []
    sampled: list[np.ndarray] = []

    for k, curve in enumerate(curves):
        arc = curve.arc
        lo, hi = arc_window(arc)
        us = np.linspace(lo, hi, samples)
        points = np.array([curve.point(u) for u in us])
        sampled.append(points)
        centre = (2 * arc.index - 1) * math.pi / 8.0
        rel = [_relative_angle(p, centre) for p in points]
        kappa = [curve.curvature(u) for u in us]

        edge = np.asarray(table.vertices[(k + 1) % 8]) - np.asarray(table.vertices[k])
        edge /= float(np.linalg.norm(edge))
        tangent_defect = abs(cross2(curve.tangent(arc.u_z), edge))

        audits.append(
            ArcAudit(
                index=arc.index,
                window=(lo, hi),
                sector=(min(rel), max(rel)),
                curvature_range=(min(kappa), max(kappa)),
                tangent_defect=tangent_defect,
            )
        )
        if tangent_defect >= TANGENT_TOL:
            violations.append(
                f"TANGENT_MISALIGNED: h_{arc.index} meets its edge at sin={tangent_defect:.3e}"
            )
        if min(kappa) <= 0.0:
            violations.append(
                f"NON_POSITIVE_CURVATURE: h_{arc.index} has curvature {min(kappa):.3e}"
            )

    for k in range(8):
        nxt = (k + 1) % 8
        gap = audits[k].sector[1] - audits[nxt].sector[0]
        if gap >= SECTOR_WIDTH:
            violations.append(
                f"ADJACENT_WINDOWS_OVERLAP: h_{k + 1} and h_{nxt + 1} overlap by "
                f"{math.degrees(gap - SECTOR_WIDTH):.3f} deg"
            )
        defect = float(np.max(np.linalg.norm(sampled[k] @ rotation.T - sampled[nxt], axis=1)))
        if defect > SYMMETRY_TOL * table.radius:
            violations.append(
                f"SYMMETRY_BROKEN: rotating h_{k + 1} by pi/4 misses h_{nxt + 1} by {defect:.3e}"
            )

    for v in violations:
        logger.warning(f"Octagon audit: {v}")
    logger.info(f"Octagon audit finished with {len(violations)} violation(s)")
    return AuditReport(passed=not violations, violations=violations, arcs=audits)
