"""双曲線弧を外部ビリヤードの凸曲線として扱うアダプタ"""
import logging
import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import brentq

from ..core.exceptions import NoConvergenceError
from ..geometry.curve import FloatArray, as_point, to_vec2
from ..geometry.schemas import BoundaryPoint
from .construction import arc_point, arc_window
from .exceptions import OutsideWindowError
from .schemas import HyperbolaArc

logger = logging.getLogger(__name__)

SCAN_SIZE = 256


def cross2(a: FloatArray, b: FloatArray) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def _wrap(angle: float) -> float:
    """(−π, π] に正規化"""
    return math.pi - (math.pi - angle) % (2.0 * math.pi)


class HyperbolaArcCurve:
    """弧 h_i 上の点を u で表し、ConvexCurve プロトコルを満たす

    反時計回りは u の減少方向。法線角は弧の範囲内でのみ定義される。
    """

    def __init__(self, arc: HyperbolaArc):
        self.arc = arc
        self.window = arc_window(arc)
        self._u_dir = np.asarray(arc.u_dir)
        self._v_dir = np.asarray(arc.v_dir)
        self._skew = abs(cross2(self._u_dir, self._v_dir))

    def __repr__(self) -> str:
        return f"<HyperbolaArcCurve(index={self.arc.index}, window={self.window})>"

    def point(self, u: float) -> FloatArray:
        return arc_point(self.arc, u)

    def velocity(self, u: float) -> FloatArray:
        """dP/du"""
        return self._u_dir - (self.arc.c / (u * u)) * self._v_dir

    def tangent(self, u: float) -> FloatArray:
        """反時計回りの単位接ベクトル"""
        d = self.velocity(u)
        return -d / float(np.linalg.norm(d))

    def normal_angle(self, u: float) -> float:
        t = self.tangent(u)
        return math.atan2(-t[0], t[1])

    def curvature(self, u: float) -> float:
        """符号付き曲率（反時計回りで正）"""
        d = self.velocity(u)
        dd = (2.0 * self.arc.c / u**3) * self._v_dir
        return -cross2(d, dd) / float(np.linalg.norm(d)) ** 3

    def radius_of_curvature(self, u: float) -> float:
        speed = float(np.linalg.norm(self.velocity(u)))
        return speed**3 * u**3 / (2.0 * self.arc.c * self._skew)

    def boundary_point(self, u: float) -> BoundaryPoint:
        t = self.tangent(u)
        theta = self.normal_angle(u)
        return BoundaryPoint(
            theta=theta,
            position=to_vec2(self.point(u)),
            tangent=to_vec2(t),
            normal=(float(t[1]), float(-t[0])),
            rho=self.radius_of_curvature(u),
        )

    def evaluate(self, theta: float) -> BoundaryPoint:
        """法線角 θ の点（弧の範囲内）

        Raises:
            OutsideWindowError: θ が弧の法線角の範囲外の場合
        """
        lo, hi = self.window
        f_lo = _wrap(self.normal_angle(lo) - theta)
        f_hi = _wrap(self.normal_angle(hi) - theta)
        if f_lo * f_hi > 0.0:
            raise OutsideWindowError(self.arc.index, math.nan, self.window)
        u = float(brentq(lambda s: _wrap(self.normal_angle(s) - theta), lo, hi, xtol=1e-15))
        return self.boundary_point(u)

    def forward_tangency(self, x: ArrayLike) -> BoundaryPoint:
        """x からの前向き接線の弧上の接点"""
        return self.boundary_point(self._tangency(as_point(x), forward=True))

    def backward_tangency(self, x: ArrayLike) -> BoundaryPoint:
        """x からの後ろ向き接線の弧上の接点"""
        return self.boundary_point(self._tangency(as_point(x), forward=False))

    def _gap(self, x: FloatArray, u: float) -> float:
        """x が u での接線上にあれば 0"""
        return cross2(self.velocity(u), x - self.point(u))

    def _tangency(self, x: FloatArray, forward: bool) -> float:
        lo, hi = self.window
        grid = np.linspace(lo, hi, SCAN_SIZE)
        values = np.array([self._gap(x, u) for u in grid])
        for a, b, fa, fb in zip(grid[:-1], grid[1:], values[:-1], values[1:], strict=True):
            if fa == 0.0:
                root = float(a)
            elif fa * fb < 0.0:
                try:
                    root = float(brentq(lambda s: self._gap(x, s), a, b, xtol=1e-15))
                except (ValueError, RuntimeError) as e:
                    raise NoConvergenceError(
                        f"Tangency root search on arc h_{self.arc.index} failed: {e}",
                        error_code="TANGENCY_ROOT_FAILED",
                        details={"point": to_vec2(x), "bracket": (float(a), float(b))},
                    ) from e
            else:
                continue
            ahead = float((self.point(root) - x) @ self.tangent(root))
            if (ahead > 0.0) == forward:
                return root
        closest = float(grid[int(np.argmin(np.abs(values)))])
        logger.debug(f"No tangency from {to_vec2(x)} on arc h_{self.arc.index}")
        raise OutsideWindowError(self.arc.index, closest, self.window)
