"""強凸平面曲線モデル（外向き法線角によるパラメータ表示）"""
import logging
import math
from typing import Protocol

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import brentq, minimize_scalar

from ..core.exceptions import NoConvergenceError
from .exceptions import CurveSpecError, ParallelTangentsError, PointInsideBodyError
from .schemas import BoundaryPoint, CurveKind, CurveSpec, Vec2
from .support import FloatArray, create_support

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
AUDIT_GRID_SIZE = 4096
TANGENCY_GRID_SIZE = 256
BOUNDARY_TOL = 1e-12
PARALLEL_TOL = 1e-12


class ConvexCurve(Protocol):
    """外部ビリヤード写像を駆動できる凸曲線のプロトコル"""

    def evaluate(self, theta: float) -> BoundaryPoint:
        """法線角 θ の境界点"""
        ...

    def forward_tangency(self, x: ArrayLike) -> BoundaryPoint:
        """x から正の向きに引いた接線の接点"""
        ...

    def backward_tangency(self, x: ArrayLike) -> BoundaryPoint:
        """x から負の向きに引いた接線の接点"""
        ...


def unit_normal(theta: ArrayLike) -> FloatArray:
    """外向き単位法線 N(θ) = (cos θ, sin θ)"""
    t = np.asarray(theta, dtype=np.float64)
    return np.stack([np.cos(t), np.sin(t)], axis=-1)


def unit_tangent(theta: ArrayLike) -> FloatArray:
    """単位接ベクトル T(θ) = (−sin θ, cos θ)"""
    t = np.asarray(theta, dtype=np.float64)
    return np.stack([-np.sin(t), np.cos(t)], axis=-1)


def as_point(x: ArrayLike) -> NDArray[np.float64]:
    """2次元点を numpy 配列に変換"""
    p = np.asarray(x, dtype=np.float64).reshape(-1)
    if p.shape != (2,):
        raise ValueError(f"expected a planar point, got shape {p.shape}")
    return p


def to_vec2(p: ArrayLike) -> Vec2:
    """numpy 配列をタプルに変換"""
    arr = np.asarray(p, dtype=np.float64).reshape(-1)
    return (float(arr[0]), float(arr[1]))


class CurveModel:
    """支持関数で表した滑らかな強凸曲線

    構築後は不変。全メソッドは純粋関数で、並行に呼び出してよい。
    """

    def __init__(self, spec: CurveSpec):
        """
        Args:
            spec: 曲線指定

        Raises:
            CurveSpecError: 支持関数または曲率半径が非正の場合
        """
        self.spec = spec
        self.kind = CurveKind(spec.type)
        self.center = np.asarray(spec.center, dtype=np.float64)
        self._support = create_support(spec)
        self._audit()

    def __repr__(self) -> str:
        return f"<CurveModel(kind={self.kind.value}, spec={self.spec.model_dump()})>"

    def _audit(self) -> None:
        """稠密格子上で h > 0 と ρ > 0 を確認"""
        grid = np.linspace(0.0, TWO_PI, AUDIT_GRID_SIZE, endpoint=False)
        h, _, _ = self._support.values(grid)
        rho = self._support.radius_of_curvature(grid)
        if np.min(h) <= 0.0:
            i = int(np.argmin(h))
            raise CurveSpecError(
                f"Support function is not positive: min h={h[i]:.6g} at theta={grid[i]:.6g}",
                error_code="NON_POSITIVE_SUPPORT",
                details={"min_h": float(h[i]), "theta": float(grid[i])},
            )
        if np.min(rho) <= 0.0:
            i = int(np.argmin(rho))
            raise CurveSpecError(
                f"Curve is not strongly convex: min rho={rho[i]:.6g} at theta={grid[i]:.6g}",
                error_code="NOT_STRONGLY_CONVEX",
                details={"min_rho": float(rho[i]), "theta": float(grid[i])},
            )

    def support_value(self, theta: ArrayLike) -> tuple[FloatArray, FloatArray, FloatArray]:
        """中心を原点とした支持関数 (h, h', h'')"""
        return self._support.values(np.asarray(theta, dtype=np.float64))

    def positions(self, theta: ArrayLike) -> FloatArray:
        """境界点 γ(θ) = c + h N + h' T（ベクトル化）"""
        t = np.asarray(theta, dtype=np.float64)
        h, h1, _ = self._support.values(t)
        return self.center + h[..., None] * unit_normal(t) + h1[..., None] * unit_tangent(t)

    def radii(self, theta: ArrayLike) -> FloatArray:
        """曲率半径 ρ(θ)（ベクトル化）"""
        return self._support.radius_of_curvature(np.asarray(theta, dtype=np.float64))

    def evaluate(self, theta: float) -> BoundaryPoint:
        """法線角 θ における境界点・接線・法線・曲率半径"""
        t = float(theta)
        return BoundaryPoint(
            theta=t,
            position=to_vec2(self.positions(t)),
            tangent=to_vec2(unit_tangent(t)),
            normal=to_vec2(unit_normal(t)),
            rho=float(self.radii(t)),
        )

    def sample(self, count: int) -> FloatArray:
        """境界を等間隔の法線角で count 点サンプル"""
        return self.positions(np.linspace(0.0, TWO_PI, count, endpoint=False))

    def _gap(self, xc: NDArray[np.float64], theta: float) -> float:
        """g(θ) = (x − c)·N(θ) − h(θ) = (x − γ(θ))·N(θ)"""
        h, _, _ = self._support.values(np.asarray(theta))
        return float(xc[0] * math.cos(theta) + xc[1] * math.sin(theta) - h)

    def _gap_slope(self, xc: NDArray[np.float64], theta: float) -> float:
        """g'(θ) = (x − γ(θ))·T(θ)"""
        _, h1, _ = self._support.values(np.asarray(theta))
        return float(-xc[0] * math.sin(theta) + xc[1] * math.cos(theta) - h1)

    def _support_max(self, xc: NDArray[np.float64]) -> tuple[float, float]:
        """g の最大値とその位置"""
        grid = np.linspace(0.0, TWO_PI, TANGENCY_GRID_SIZE, endpoint=False)
        h, _, _ = self._support.values(grid)
        g = unit_normal(grid) @ xc - h
        i = int(np.argmax(g))
        step = TWO_PI / TANGENCY_GRID_SIZE
        res = minimize_scalar(
            lambda t: -self._gap(xc, t),
            bounds=(grid[i] - step, grid[i] + step),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if -float(res.fun) > g[i]:
            return float(res.x), -float(res.fun)
        return float(grid[i]), float(g[i])

    def support_excess(self, x: ArrayLike) -> float:
        """max_θ (x − γ(θ))·N(θ)。正なら外部"""
        _, excess = self._support_max(as_point(x) - self.center)
        return excess

    def contains(self, x: ArrayLike) -> bool:
        """x が閉凸体（境界を含む）に属するか"""
        return self.support_excess(x) <= BOUNDARY_TOL

    def forward_tangency(self, x: ArrayLike) -> BoundaryPoint:
        """x からの前向き接線の接点（像 2z − x が正の向きに進む側）

        Raises:
            PointInsideBodyError: x が外部にない場合
            NoConvergenceError: 根の囲い込みに失敗した場合
        """
        return self.evaluate(self._tangency(as_point(x), forward=True))

    def backward_tangency(self, x: ArrayLike) -> BoundaryPoint:
        """x からの後ろ向き接線の接点"""
        return self.evaluate(self._tangency(as_point(x), forward=False))

    def _tangency(self, x: NDArray[np.float64], forward: bool) -> float:
        xc = x - self.center
        theta_max, excess = self._support_max(xc)
        if excess <= BOUNDARY_TOL * (1.0 + float(np.hypot(*x))):
            raise PointInsideBodyError(to_vec2(x), excess)

        # 最大点から片側に歩き、符号が変わる格子区間で囲い込む
        step = (TWO_PI / TANGENCY_GRID_SIZE) * (1.0 if forward else -1.0)
        inner = theta_max
        outer = None
        for k in range(1, TANGENCY_GRID_SIZE + 1):
            t = theta_max + k * step
            if self._gap(xc, t) < 0.0:
                outer = t
                break
            inner = t
        if outer is None:
            raise NoConvergenceError(
                "Tangency bracket not found; curve invariants may be violated",
                error_code="TANGENCY_BRACKET_FAILED",
                details={"point": to_vec2(x), "forward": forward},
            )

        lo, hi = min(inner, outer), max(inner, outer)
        try:
            root = float(brentq(lambda t: self._gap(xc, t), lo, hi, xtol=1e-15, maxiter=200))
        except (ValueError, RuntimeError) as e:
            raise NoConvergenceError(
                f"Tangency root search failed: {e}",
                error_code="TANGENCY_ROOT_FAILED",
                details={"point": to_vec2(x), "bracket": (lo, hi)},
            ) from e

        # Newton で仕上げ（囲い込み区間内で残差が減る場合のみ採用）
        slope = self._gap_slope(xc, root)
        if slope != 0.0:
            polished = root - self._gap(xc, root) / slope
            if lo <= polished <= hi and abs(self._gap(xc, polished)) < abs(self._gap(xc, root)):
                root = polished
        return root % TWO_PI

    def tangent_intersection(self, theta_a: float, theta_b: float) -> NDArray[np.float64]:
        """法線角 θ_a, θ_b における2接線の交点

        Raises:
            ParallelTangentsError: 接線が平行な場合
        """
        det = math.sin(theta_b - theta_a)
        if abs(det) < PARALLEL_TOL:
            raise ParallelTangentsError(theta_a, theta_b)
        normals = unit_normal(np.array([theta_a, theta_b]))
        h, _, _ = self._support.values(np.array([theta_a, theta_b]))
        rhs = h + normals @ self.center
        return np.asarray(np.linalg.solve(normals, rhs), dtype=np.float64)
