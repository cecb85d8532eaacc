"""シンプレクティックビリヤード関連のPydanticスキーマ"""
import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SYMMETRY_TOL = 1e-12


class ChordState(BaseModel):
    """相空間の点: 弦 γ(t_prev) → γ(t_cur)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    t_prev: float = Field(..., description="始点の法線角")
    t_cur: float = Field(..., description="終点の法線角")

    @model_validator(mode="after")
    def _check_admissible(self) -> "ChordState":
        # cross(T(t_prev), T(t_cur)) = sin(t_cur − t_prev)
        if not math.sin(self.t_cur - self.t_prev) > 0.0:
            raise ValueError(
                f"chord state ({self.t_prev}, {self.t_cur}) is not positively oriented"
            )
        return self


class Ellipsoid2n(BaseModel):
    """R^{2n} の中心楕円体 {x : x·Qx = 1}"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    type: Literal["ellipsoid"] = "ellipsoid"
    Q: list[list[float]] = Field(..., description="対称正定値の形状行列")

    @field_validator("Q")
    @classmethod
    def _check_shape(cls, q: list[list[float]]) -> list[list[float]]:
        dim = len(q)
        if dim < 2 or dim % 2:
            raise ValueError(f"dimension must be even and >= 2 (got {dim})")
        if any(len(row) != dim for row in q):
            raise ValueError("Q must be square")
        arr = np.asarray(q, dtype=np.float64)
        if np.max(np.abs(arr - arr.T)) > SYMMETRY_TOL:
            raise ValueError("Q must be symmetric")
        if np.min(np.linalg.eigvalsh(arr)) <= 0.0:
            raise ValueError("Q must be positive definite")
        return q

    @property
    def dim(self) -> int:
        return len(self.Q)


class FourPeriodicCandidate(BaseModel):
    """境界点 A を通る4周期軌道の唯一の候補（平面）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    t_a: float = Field(..., description="A の法線角")
    t_b: float = Field(..., description="B の法線角（A と C の間）")
    t_c: float = Field(..., description="C の法線角 = t_A + π")
    t_d: float = Field(..., description="D の法線角 = t_B + π")
    closure_residual: float = Field(..., ge=0.0, description="4つの反射条件の残差の最大値")
    closes: bool = Field(..., description="4周期軌道か")


class FourPeriodicCandidate2n(BaseModel):
    """楕円体上の点 A を通る4周期軌道の唯一の候補"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    vertices: list[list[float]] = Field(..., description="A, B, C, D")
    residuals: list[float] = Field(..., description="各頂点での平行性の残差（sin）")
    closure_residual: float = Field(..., ge=0.0, description="残差の最大値")
    closes: bool = Field(..., description="4周期軌道か")
