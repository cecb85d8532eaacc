"""計算結果から描画シーンを組み立てる"""
import math
from collections.abc import Sequence

import numpy as np

from ..core.config import settings
from ..geometry.curve import CurveModel, to_vec2
from ..geometry.schemas import Vec2
from ..octagon.construction import arc_point, arc_window
from ..octagon.schemas import EightCycle, OctagonTable
from ..outer.schemas import OuterOrbit
from ..symplectic.schemas import Ellipsoid2n
from .svg import Scene

ARC_SAMPLES = 64


def curve_points(curve: CurveModel) -> list[Vec2]:
    return [to_vec2(p) for p in curve.sample(settings.svg_curve_samples)]


def ellipse_points(body: Ellipsoid2n) -> list[Vec2]:
    """2次元楕円体 x·Qx = 1 の境界サンプル"""
    eigenvalues, eigenvectors = np.linalg.eigh(np.asarray(body.Q, dtype=np.float64))
    t = np.linspace(0.0, 2.0 * math.pi, settings.svg_curve_samples, endpoint=False)
    unit = np.column_stack([np.cos(t), np.sin(t)]) / np.sqrt(eigenvalues)
    return [to_vec2(p) for p in unit @ eigenvectors.T]


def orbit_scene(
    curve: CurveModel, orbits: Sequence[OuterOrbit], title: str | None = None
) -> Scene:
    """曲線・閉軌道・接点"""
    markers: list[Vec2] = []
    for orbit in orbits:
        markers.extend(to_vec2(p) for p in curve.positions(np.asarray(orbit.tangencies)))
    return Scene(
        curve=curve_points(curve),
        orbits=[list(orbit.vertices) for orbit in orbits],
        markers=markers,
        title=title,
    )


def trajectory_scene(
    boundary: list[Vec2],
    points: Sequence[Vec2],
    closed: bool,
    markers: Sequence[Vec2] = (),
    title: str | None = None,
) -> Scene:
    """閉じていれば多角形、そうでなければ折れ線として描く"""
    scene = Scene(curve=boundary, markers=list(markers), title=title)
    if closed:
        scene.orbits.append(list(points))
    elif points:
        scene.arcs.append(list(points))
    return scene


def octagon_scene(table: OctagonTable, segments: Sequence[tuple[EightCycle, EightCycle]]) -> Scene:
    """八角形・双曲線弧・8周期点の線分（各線分の両端は走査の最小・最大のずれ）"""
    arcs = []
    for arc in table.arcs:
        lo, hi = arc_window(arc)
        arcs.append([to_vec2(arc_point(arc, u)) for u in np.linspace(lo, hi, ARC_SAMPLES)])
    return Scene(
        outlines=[list(table.vertices)],
        arcs=arcs,
        segments=[(first.points[0], last.points[0]) for first, last in segments],
        markers=list(table.midpoints),
        title=f"Regular octagon R={table.radius:g} with hyperbola arcs",
    )
