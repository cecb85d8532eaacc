"""正八角形と双曲線弧によるテーブル、および8周期点の線分"""
import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..geometry.curve import as_point, to_vec2
from .exceptions import OctagonError, OutsideWindowError
from .schemas import CycleLine, EightCycle, HyperbolaArc, OctagonSweep, OctagonTable

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 0.1
ASYMPTOTE_TOL = 1e-9

FloatArray = NDArray[np.float64]

# (種類, 番号): "h" は双曲線 h_i による写像、"z" は中点 z_i に関する点対称
_PATTERNS: dict[CycleLine, list[tuple[str, int]]] = {
    CycleLine.X1X8: [("h" if i % 2 else "z", i) for i in range(1, 9)],
    CycleLine.X1X2: [("z" if i % 2 else "h", i) for i in range(1, 9)],
}


def _unit(v: FloatArray) -> FloatArray:
    return v / float(np.linalg.norm(v))


def _line_intersection(
    p1: FloatArray, p2: FloatArray, q1: FloatArray, q2: FloatArray
) -> FloatArray:
    """直線 p1p2 と q1q2 の交点"""
    a = np.column_stack([p2 - p1, q1 - q2])
    s, _ = np.linalg.solve(a, q1 - p1)
    return p1 + s * (p2 - p1)


def octagon_vertices(radius: float) -> FloatArray:
    """x_k = R(cos 2π(k−1)/8, sin 2π(k−1)/8)"""
    angles = 2.0 * math.pi * np.arange(8) / 8.0
    return radius * np.column_stack([np.cos(angles), np.sin(angles)])


def build_table(radius: float = 1.0, halfwidth: float | None = None) -> OctagonTable:
    """正八角形と、辺 x_i x_{i+1} に z_i で接し漸近線が x_{i−1}x_i, x_{i+1}x_{i+2} の双曲線 h_i

    Args:
        radius: 外接円半径 R
        halfwidth: 弧として残す漸近線座標の半幅（既定 0.1R）
    """
    if radius <= 0.0:
        raise OctagonError(
            f"Circumradius must be positive, got {radius}",
            error_code="INVALID_RADIUS",
            details={"radius": radius},
        )
    width = DEFAULT_WINDOW * radius if halfwidth is None else halfwidth
    x = octagon_vertices(radius)
    mids = 0.5 * (x + np.roll(x, -1, axis=0))

    arcs = []
    for i in range(8):
        prev, cur, nxt, nnxt = x[i - 1], x[i], x[(i + 1) % 8], x[(i + 2) % 8]
        origin = _line_intersection(prev, cur, nxt, nnxt)
        u_vec, v_vec = cur - origin, nxt - origin
        u_z = 0.5 * float(np.linalg.norm(u_vec))
        v_z = 0.5 * float(np.linalg.norm(v_vec))
        arcs.append(
            HyperbolaArc(
                index=i + 1,
                origin=to_vec2(origin),
                u_dir=to_vec2(_unit(u_vec)),
                v_dir=to_vec2(_unit(v_vec)),
                c=u_z * v_z,
                u_z=u_z,
                v_z=v_z,
                tangency=to_vec2(mids[i]),
                arc_halfwidth=width,
            )
        )
    logger.info(f"Octagon table built: R={radius}, arc half-width={width:.6g}")
    return OctagonTable(
        radius=radius,
        vertices=[to_vec2(p) for p in x],
        midpoints=[to_vec2(p) for p in mids],
        arcs=arcs,
    )


def arc_window(arc: HyperbolaArc) -> tuple[float, float]:
    """|u − u_z| <= w かつ |v − v_z| <= w を満たす u の範囲"""
    w = arc.arc_halfwidth
    lo = max(arc.u_z - w, arc.c / (arc.v_z + w))
    hi = arc.u_z + w if arc.v_z <= w else min(arc.u_z + w, arc.c / (arc.v_z - w))
    return lo, hi


def arc_point(arc: HyperbolaArc, u: float) -> FloatArray:
    """O + u·u_dir + (c/u)·v_dir"""
    return (
        np.asarray(arc.origin)
        + u * np.asarray(arc.u_dir)
        + (arc.c / u) * np.asarray(arc.v_dir)
    )


def asymptote_coordinates(arc: HyperbolaArc, p: ArrayLike) -> FloatArray:
    """漸近線座標 (u, v)"""
    basis = np.column_stack([arc.u_dir, arc.v_dir])
    return np.asarray(np.linalg.solve(basis, as_point(p) - np.asarray(arc.origin)))


def hyperbola_tangent_map(arc: HyperbolaArc, p: ArrayLike) -> tuple[FloatArray, FloatArray]:
    """第1漸近線上の p = O + 2u₀·u_dir を第2漸近線上の q = O + 2(c/u₀)·v_dir へ

    接点 O + u₀·u_dir + (c/u₀)·v_dir は線分 pq の中点。

    Raises:
        OctagonError: p が第1漸近線上にない場合
        OutsideWindowError: 接点が弧の範囲外の場合
    """
    point = as_point(p)
    u, v = asymptote_coordinates(arc, point)
    if abs(v) > ASYMPTOTE_TOL * (1.0 + float(np.linalg.norm(point))):
        raise OctagonError(
            f"Point is not on the first asymptote of h_{arc.index} (v={v:.3e})",
            error_code="NOT_ON_ASYMPTOTE",
            details={"arc": arc.index, "v": float(v)},
        )
    u0 = 0.5 * float(u)
    lo, hi = arc_window(arc)
    if not lo <= u0 <= hi:
        raise OutsideWindowError(arc.index, u0, (lo, hi))
    origin = np.asarray(arc.origin)
    q = origin + 2.0 * (arc.c / u0) * np.asarray(arc.v_dir)
    tangency = origin + u0 * np.asarray(arc.u_dir) + (arc.c / u0) * np.asarray(arc.v_dir)
    return q, tangency


def reflect_across_axis(arc: HyperbolaArc, p: ArrayLike) -> FloatArray:
    """弧の対称軸（O と z_i を通る直線）に関する鏡映"""
    origin = np.asarray(arc.origin)
    axis = _unit(np.asarray(arc.tangency) - origin)
    rel = as_point(p) - origin
    return origin + 2.0 * float(rel @ axis) * axis - rel


def eight_cycle(
    table: OctagonTable, offset: float, line: CycleLine | str = CycleLine.X1X8
) -> EightCycle:
    """x_1 から直線に沿って offset ずらした点の8ステップ軌道

    x1x8: x_1' = x_1 + offset·(x_8 − x_1)/|x_8 − x_1|
    x1x2: x_1' = x_1 + offset·(x_2 − x_1)/|x_2 − x_1|

    Raises:
        OutsideWindowError: 接点が弧の範囲外に出た場合
    """
    cycle_line = CycleLine(line)
    x = np.asarray(table.vertices)
    toward = x[7] if cycle_line is CycleLine.X1X8 else x[1]
    start = x[0] + offset * _unit(toward - x[0])

    points = [start]
    tangencies: list[FloatArray] = []
    p = start
    for kind, i in _PATTERNS[cycle_line]:
        if kind == "h":
            p, touch = hyperbola_tangent_map(table.arcs[i - 1], p)
        else:
            touch = np.asarray(table.midpoints[i - 1])
            p = 2.0 * touch - p
        tangencies.append(touch)
        points.append(p)

    final = points[-1]
    residual = float(np.linalg.norm(final - start))
    symmetry = None
    if cycle_line is CycleLine.X1X8:
        symmetry = abs(
            float(np.linalg.norm(start - x[0])) - float(np.linalg.norm(points[3] - x[3]))
        )
    return EightCycle(
        line=cycle_line,
        offset=offset,
        points=[to_vec2(q) for q in points[:8]],
        tangencies=[to_vec2(t) for t in tangencies],
        final=to_vec2(final),
        closure_residual=residual,
        symmetry_defect=symmetry,
    )


def sweep(
    table: OctagonTable,
    count: int = 50,
    line: CycleLine | str = CycleLine.X1X8,
    min_offset: float = 1e-4,
    max_offset: float = 5e-2,
) -> OctagonSweep:
    """±[min_offset, max_offset]·R を対数等間隔で走査（count 点、正負半分ずつ）"""
    cycle_line = CycleLine(line)
    half = np.geomspace(min_offset, max_offset, max(1, count // 2)) * table.radius
    offsets = np.concatenate([-half[::-1], half])
    result = OctagonSweep(line=cycle_line)
    for offset in offsets:
        cycle = eight_cycle(table, float(offset), cycle_line)
        result.offsets.append(float(offset))
        result.residuals.append(cycle.closure_residual)
        result.symmetry_defects.append(cycle.symmetry_defect)
    result.max_residual = max(result.residuals, default=0.0)
    logger.info(
        f"Octagon sweep on line {cycle_line.value}: {len(offsets)} offsets, "
        f"max closure residual {result.max_residual:.3e}"
    )
    return result
