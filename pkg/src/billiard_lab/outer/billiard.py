"""外部ビリヤード写像・微分・モノドロミー"""
import logging
import math
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..core.config import settings
from ..geometry.curve import ConvexCurve, as_point, to_vec2
from ..geometry.schemas import Vec2
from .exceptions import DegeneratePolygonError, NotPeriodicError, OrbitNotClosedError
from .schemas import (
    FrameDescriptor,
    MonodromyComparison,
    OrbitAngles,
    OuterOrbit,
    OuterStep,
    TangencyPolygon,
)

logger = logging.getLogger(__name__)

Matrix = NDArray[np.float64]
DEGENERATE_SIDE_TOL = 1e-12


def rotation(angle: float) -> Matrix:
    """角度 angle の回転行列 R(angle)"""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def shear(s: float) -> Matrix:
    """水平シアー行列 [[1, s], [0, 1]]"""
    return np.array([[1.0, s], [0.0, 1.0]])


def outer_map(curve: ConvexCurve, x: ArrayLike) -> OuterStep:
    """外部ビリヤード写像 F: y = 2z − x（z は前向き接点）

    Raises:
        PointInsideBodyError: x が外部にない場合
    """
    p = as_point(x)
    z = curve.forward_tangency(p)
    zp = np.asarray(z.position)
    y = 2.0 * zp - p
    return OuterStep(x=to_vec2(p), z=z, y=to_vec2(y), r=float(np.linalg.norm(p - zp)))


def outer_map_inverse(curve: ConvexCurve, y: ArrayLike) -> OuterStep:
    """逆写像 F⁻¹: x = 2z − y（z は後ろ向き接点）"""
    q = as_point(y)
    z = curve.backward_tangency(q)
    zp = np.asarray(z.position)
    x = 2.0 * zp - q
    return OuterStep(x=to_vec2(x), z=z, y=to_vec2(q), r=float(np.linalg.norm(x - zp)))


def iterate(curve: ConvexCurve, x: ArrayLike, steps: int) -> list[OuterStep]:
    """x から steps 回写像を適用した軌道"""
    trajectory: list[OuterStep] = []
    point = as_point(x)
    for _ in range(steps):
        step = outer_map(curve, point)
        trajectory.append(step)
        point = np.asarray(step.y)
    return trajectory


def iterate_point(curve: ConvexCurve, x: ArrayLike, steps: int) -> NDArray[np.float64]:
    """F^steps(x)"""
    trajectory = iterate(curve, x, steps)
    return np.asarray(trajectory[-1].y) if trajectory else as_point(x)


def local_differential(curve: ConvexCurve, x: ArrayLike) -> tuple[Matrix, FrameDescriptor]:
    """dF|_x = [[−1, −2ρ/r], [0, −1]]（基底: z→x の単位ベクトル, z での外向き法線）"""
    p = as_point(x)
    z = curve.forward_tangency(p)
    zp = np.asarray(z.position)
    r = float(np.linalg.norm(p - zp))
    e1 = (p - zp) / r
    matrix = np.array([[-1.0, -2.0 * z.rho / r], [0.0, -1.0]])
    frame = FrameDescriptor(origin=to_vec2(p), e1=to_vec2(e1), e2=z.normal, rho=z.rho, r=r)
    return matrix, frame


def frame_matrix(frame: FrameDescriptor) -> Matrix:
    """フレームの基底ベクトルを列に並べた行列"""
    return np.column_stack([frame.e1, frame.e2])


def orbit_angles(vertices: Sequence[Vec2] | NDArray[np.float64]) -> OrbitAngles:
    """閉多角形の内角 α_i（頂点 x_{i+1}）、外角 β_i、回転数 m

    Raises:
        DegeneratePolygonError: 辺の長さが0、または回転の向きがそろわない頂点がある場合
    """
    pts = np.asarray(vertices, dtype=np.float64)
    n = len(pts)
    if n < 3:
        raise DegeneratePolygonError(
            f"A closed polygon needs at least 3 vertices (got {n})", error_code="TOO_FEW_VERTICES"
        )
    sides = np.roll(pts, -1, axis=0) - pts
    lengths = np.linalg.norm(sides, axis=1)
    scale = 1.0 + float(np.max(np.linalg.norm(pts, axis=1)))
    if np.min(lengths) < DEGENERATE_SIDE_TOL * scale:
        i = int(np.argmin(lengths))
        raise DegeneratePolygonError(
            f"Repeated consecutive vertices at index {i}",
            error_code="REPEATED_VERTEX",
            details={"index": i},
        )

    nxt = np.roll(sides, -1, axis=0)
    cross = sides[:, 0] * nxt[:, 1] - sides[:, 1] * nxt[:, 0]
    dot = np.sum(sides * nxt, axis=1)
    betas = np.arctan2(cross, dot)
    if float(np.sum(betas)) < 0.0:
        # 右回りの頂点列は向きを反転して扱う
        betas = -betas
    if np.any(betas <= 0.0) or np.any(betas >= math.pi):
        i = int(np.argmin(betas))
        raise DegeneratePolygonError(
            f"Polygon does not turn consistently at vertex {(i + 1) % n}",
            error_code="NON_POSITIVE_TURN",
            details={"index": (i + 1) % n, "beta": float(betas[i])},
        )
    winding = int(round(float(np.sum(betas)) / (2.0 * math.pi)))
    alphas = math.pi - betas
    return OrbitAngles(alphas=alphas.tolist(), betas=betas.tolist(), winding=winding)


def orbit_from_points(
    curve: ConvexCurve, vertices: Sequence[Vec2] | NDArray[np.float64]
) -> OuterOrbit:
    """頂点列から OuterOrbit を構築（閉包残差は写像の再適用で測る）

    Raises:
        OrbitNotClosedError: 閉包残差が許容値を超える場合
    """
    pts = np.asarray(vertices, dtype=np.float64)
    n = len(pts)
    steps = iterate(curve, pts[0], n)
    residual = float(np.linalg.norm(np.asarray(steps[-1].y) - pts[0]))
    if residual > settings.periodicity_tol:
        raise OrbitNotClosedError(residual, settings.periodicity_tol)
    angles = orbit_angles(pts)
    return OuterOrbit(
        n=n,
        vertices=[to_vec2(p) for p in pts],
        tangencies=[step.z.theta for step in steps],
        alphas=angles.alphas,
        betas=angles.betas,
        winding=angles.winding,
        closure_residual=residual,
    )


def build_orbit(curve: ConvexCurve, x1: ArrayLike, n: int) -> OuterOrbit:
    """x_1 から n 回写像して閉軌道を構築"""
    steps = iterate(curve, x1, n)
    vertices = [step.x for step in steps]
    orbit = orbit_from_points(curve, vertices)
    logger.info(
        f"Built ({orbit.n},{orbit.winding})-orbit, "
        f"closure residual {orbit.closure_residual:.2e}"
    )
    return orbit


def orbit_frame(curve: ConvexCurve, orbit: OuterOrbit) -> Matrix:
    """x_1 における (z_1→x_1, N(z_1)) 基底を列に持つ回転行列"""
    _, frame = local_differential(curve, orbit.vertices[0])
    return frame_matrix(frame)


def monodromy_analytic(curve: ConvexCurve, orbit: OuterOrbit) -> Matrix:
    """dF^n|_{x_1} = R(α_n)A_n ⋯ R(α_1)A_1, A_i = [[1, 2ρ_i/r_i], [0, 1]]

    Raises:
        OrbitNotClosedError: 軌道が閉じていない場合
    """
    if orbit.closure_residual >= settings.periodicity_tol:
        raise OrbitNotClosedError(orbit.closure_residual, settings.periodicity_tol)
    product = np.eye(2)
    for x, theta, alpha in zip(orbit.vertices, orbit.tangencies, orbit.alphas, strict=True):
        z = curve.evaluate(theta)
        r = math.dist(x, z.position)
        product = rotation(alpha) @ shear(2.0 * z.rho / r) @ product
    return product


def monodromy_numeric(
    curve: ConvexCurve, x: ArrayLike, n: int, h: float | None = None
) -> Matrix:
    """F^n の中心差分ヤコビアン（大域座標）

    Raises:
        NotPeriodicError: x が n-周期点でない場合
    """
    p = as_point(x)
    step = settings.fd_step if h is None else h
    residual = float(np.linalg.norm(iterate_point(curve, p, n) - p))
    if residual > settings.periodicity_tol:
        raise NotPeriodicError(n, residual, settings.periodicity_tol)

    jacobian = np.empty((2, 2))
    for j in range(2):
        e = np.zeros(2)
        e[j] = step
        forward = iterate_point(curve, p + e, n)
        backward = iterate_point(curve, p - e, n)
        jacobian[:, j] = (forward - backward) / (2.0 * step)
    det = float(np.linalg.det(jacobian))
    if abs(det - 1.0) > 1e-4:
        logger.warning(f"Numeric monodromy determinant {det:.8f} deviates from 1")
    return jacobian


def conjugate_to_frame(jacobian: Matrix, frame: Matrix) -> Matrix:
    """大域座標のヤコビアンをフレーム座標に変換: Pᵀ J P"""
    return np.asarray(frame.T @ jacobian @ frame, dtype=np.float64)


def circle_map_oracle(
    radius: float, x: ArrayLike, center: Vec2 = (0.0, 0.0)
) -> NDArray[np.float64]:
    """円の外部ビリヤード写像の閉形式: 中心まわりに 2·arctan(√(|x|²−R²)/R) 回転"""
    c = np.asarray(center, dtype=np.float64)
    rel = as_point(x) - c
    d = float(np.linalg.norm(rel))
    angle = 2.0 * math.atan(math.sqrt(d * d - radius * radius) / radius)
    return c + rotation(angle) @ rel


def tangency_polygon(curve: ConvexCurve, orbit: OuterOrbit) -> TangencyPolygon:
    """接点多角形と n=3, 4 の幾何的欠差"""
    pts = np.asarray(orbit.vertices)
    mids = 0.5 * (pts + np.roll(pts, -1, axis=0))
    parallelogram = None
    midsegment: list[float] = []
    if orbit.n == 4:
        parallelogram = float(np.linalg.norm((mids[1] - mids[0]) - (mids[2] - mids[3])))
    elif orbit.n == 3:
        for i in range(3):
            seg = mids[(i + 2) % 3] - mids[(i + 1) % 3]
            t = np.asarray(curve.evaluate(orbit.tangencies[i]).tangent)
            cross = float(seg[0] * t[1] - seg[1] * t[0])
            midsegment.append(abs(cross) / float(np.linalg.norm(seg)))
    return TangencyPolygon(
        midpoints=[to_vec2(m) for m in mids],
        parallelogram_defect=parallelogram,
        midsegment_defects=midsegment,
    )


def compare_monodromy(
    curve: ConvexCurve, orbit: OuterOrbit, h: float | None = None
) -> MonodromyComparison:
    """解析的な積と、フレーム座標に変換した数値ヤコビアンを比較"""
    analytic = monodromy_analytic(curve, orbit)
    numeric = conjugate_to_frame(
        monodromy_numeric(curve, orbit.vertices[0], orbit.n, h), orbit_frame(curve, orbit)
    )
    difference = float(np.max(np.abs(analytic - numeric)))
    logger.info(f"Monodromy of ({orbit.n},{orbit.winding})-orbit: max difference {difference:.3e}")
    return MonodromyComparison(
        n=orbit.n,
        m=orbit.winding,
        analytic=analytic.tolist(),
        numeric=numeric.tolist(),
        max_difference=difference,
        determinant=float(np.linalg.det(analytic)),
        trace=float(np.trace(analytic)),
    )
