"""支持関数の実装"""
from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import NDArray

from .exceptions import CurveSpecError
from .schemas import CircleSpec, CurveSpec, EllipseSpec, SupportFourierSpec

FloatArray = NDArray[np.float64]


class SupportFunction(ABC):
    """支持関数 h(θ) とその導関数の抽象基底クラス

    中心を原点とした値を返す。中心の平行移動は CurveModel が加える。
    """

    @abstractmethod
    def values(self, theta: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
        """(h, h', h'') を返す"""
        pass

    def radius_of_curvature(self, theta: FloatArray) -> FloatArray:
        """曲率半径 ρ = h + h''"""
        h, _, h2 = self.values(theta)
        return h + h2


class CircleSupport(SupportFunction):
    """円の支持関数"""

    def __init__(self, spec: CircleSpec):
        self.radius = spec.radius

    def values(self, theta: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
        h = np.full_like(theta, self.radius, dtype=np.float64)
        zeros = np.zeros_like(h)
        return h, zeros, zeros


class EllipseSupport(SupportFunction):
    """楕円の支持関数 h(θ) = √(a²cos²θ + b²sin²θ)（導関数は解析式）"""

    def __init__(self, spec: EllipseSpec):
        self.a = spec.a
        self.b = spec.b

    def values(self, theta: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
        a2, b2 = self.a**2, self.b**2
        c, s = np.cos(theta), np.sin(theta)
        h = np.sqrt(a2 * c**2 + b2 * s**2)
        h1 = (b2 - a2) * s * c / h
        h2 = a2 * b2 / h**3 - h
        return h, h1, h2

    def radius_of_curvature(self, theta: FloatArray) -> FloatArray:
        h, _, _ = self.values(theta)
        return self.a**2 * self.b**2 / h**3


class FourierSupport(SupportFunction):
    """フーリエ級数で与えた支持関数"""

    def __init__(self, spec: SupportFourierSpec):
        self.a0 = spec.a0
        self.orders = np.array([k for k, _, _ in spec.terms], dtype=np.float64)
        self.cos_coeffs = np.array([a for _, a, _ in spec.terms], dtype=np.float64)
        self.sin_coeffs = np.array([b for _, _, b in spec.terms], dtype=np.float64)

    def values(self, theta: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
        theta = np.asarray(theta, dtype=np.float64)
        if self.orders.size == 0:
            h = np.full_like(theta, self.a0)
            zeros = np.zeros_like(h)
            return h, zeros, zeros
        k = self.orders
        kt = np.multiply.outer(theta, k)
        c, s = np.cos(kt), np.sin(kt)
        h = self.a0 + c @ self.cos_coeffs + s @ self.sin_coeffs
        h1 = (-s * k) @ self.cos_coeffs + (c * k) @ self.sin_coeffs
        h2 = (-c * k**2) @ self.cos_coeffs + (-s * k**2) @ self.sin_coeffs
        return h, h1, h2


def create_support(spec: CurveSpec) -> SupportFunction:
    """指定に基づいて支持関数を作成"""
    if isinstance(spec, CircleSpec):
        return CircleSupport(spec)
    elif isinstance(spec, EllipseSpec):
        return EllipseSupport(spec)
    elif isinstance(spec, SupportFourierSpec):
        return FourierSupport(spec)
    else:
        raise CurveSpecError(f"Unsupported curve spec: {spec!r}", error_code="UNSUPPORTED_CURVE")
