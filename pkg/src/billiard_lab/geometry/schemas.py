"""曲線幾何関連のPydanticスキーマ"""
from enum import Enum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Vec2 = tuple[float, float]


class CurveKind(str, Enum):
    """曲線の種類"""

    CIRCLE = "circle"
    ELLIPSE = "ellipse"
    SUPPORT_FOURIER = "support_fourier"


class CircleSpec(BaseModel):
    """円の指定"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    type: Literal["circle"] = "circle"
    radius: float = Field(..., gt=0.0, description="半径 R")
    center: Vec2 = Field(default=(0.0, 0.0), description="中心")


class EllipseSpec(BaseModel):
    """楕円の指定（長軸は x 軸方向）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    type: Literal["ellipse"] = "ellipse"
    a: float = Field(..., gt=0.0, description="長半径")
    b: float = Field(..., gt=0.0, description="短半径")
    center: Vec2 = Field(default=(0.0, 0.0), description="中心")

    @model_validator(mode="after")
    def _check_axes(self) -> "EllipseSpec":
        if self.a < self.b:
            raise ValueError(f"semi-axes must satisfy a >= b (got a={self.a}, b={self.b})")
        return self


class SupportFourierSpec(BaseModel):
    """支持関数のフーリエ係数による指定

    h(θ) = a0 + Σ (a_k cos kθ + b_k sin kθ), k >= 2
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    type: Literal["support_fourier"] = "support_fourier"
    a0: float = Field(..., gt=0.0, description="定数項")
    terms: list[tuple[int, float, float]] = Field(
        default_factory=list, description="(k, a_k, b_k) の列"
    )
    center: Vec2 = Field(default=(0.0, 0.0), description="中心")

    @field_validator("terms")
    @classmethod
    def _check_orders(cls, terms: list[tuple[int, float, float]]) -> list[tuple[int, float, float]]:
        for k, _, _ in terms:
            if k < 2:
                raise ValueError(f"Fourier orders must be >= 2 (got k={k})")
        return terms


CurveSpec = Annotated[CircleSpec | EllipseSpec | SupportFourierSpec, Field(discriminator="type")]


class BoundaryPoint(BaseModel):
    """境界上の点と局所フレーム"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    theta: float = Field(..., description="外向き法線角（ラジアン）")
    position: Vec2 = Field(..., description="境界点 γ(θ)")
    tangent: Vec2 = Field(..., description="単位接ベクトル T(θ)")
    normal: Vec2 = Field(..., description="外向き単位法線 N(θ)")
    rho: float = Field(..., gt=0.0, description="曲率半径")
