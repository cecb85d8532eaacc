"""外部ビリヤード関連のPydanticスキーマ"""
import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..geometry.schemas import BoundaryPoint, Vec2

ANGLE_SUM_TOL = 1e-8


class OuterStep(BaseModel):
    """外部ビリヤード写像の1ステップ x ↦ y（接点 z は xy の中点）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    x: Vec2 = Field(..., description="原像")
    z: BoundaryPoint = Field(..., description="接点")
    y: Vec2 = Field(..., description="像")
    r: float = Field(..., gt=0.0, description="|x − z|")

    @model_validator(mode="after")
    def _check_midpoint(self) -> "OuterStep":
        scale = 1.0 + math.hypot(*self.x)
        mx = 0.5 * (self.x[0] + self.y[0]) - self.z.position[0]
        my = 0.5 * (self.x[1] + self.y[1]) - self.z.position[1]
        if math.hypot(mx, my) > 1e-10 * scale:
            raise ValueError("tangency point is not the midpoint of x and y")
        dx, dy = self.y[0] - self.x[0], self.y[1] - self.x[1]
        if dx * self.z.tangent[0] + dy * self.z.tangent[1] <= 0.0:
            raise ValueError("step is not positively oriented along the boundary")
        return self


class FrameDescriptor(BaseModel):
    """微分行列を表す基底 (z→x の単位ベクトル, z での外向き法線)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    origin: Vec2 = Field(..., description="基点 x")
    e1: Vec2 = Field(..., description="z から x への単位ベクトル")
    e2: Vec2 = Field(..., description="z での外向き単位法線")
    rho: float = Field(..., gt=0.0, description="接点での曲率半径")
    r: float = Field(..., gt=0.0, description="|x − z|")


class OrbitAngles(BaseModel):
    """閉多角形の内角・外角と回転数"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    alphas: list[float] = Field(..., description="内角 α_i（頂点 x_{i+1}）")
    betas: list[float] = Field(..., description="外角 β_i = π − α_i")
    winding: int = Field(..., description="回転数 m = Σβ / 2π")


class OuterOrbit(BaseModel):
    """閉じた外部ビリヤード軌道 ((n, m)-軌道)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(..., ge=3, description="周期")
    vertices: list[Vec2] = Field(..., description="頂点 x_1..x_n")
    tangencies: list[float] = Field(..., description="接点の法線角 θ_1..θ_n（z_i は x_i x_{i+1} の中点）")
    alphas: list[float] = Field(..., description="内角 α_1..α_n")
    betas: list[float] = Field(..., description="外角 β_1..β_n")
    winding: int = Field(..., ge=1, description="回転数 m")
    closure_residual: float = Field(..., ge=0.0, description="|F^n(x_1) − x_1|")

    @model_validator(mode="after")
    def _check_angles(self) -> "OuterOrbit":
        for name in ("vertices", "tangencies", "alphas", "betas"):
            if len(getattr(self, name)) != self.n:
                raise ValueError(f"{name} must have length n={self.n}")
        if not 0 < 2 * self.winding < self.n:
            raise ValueError(f"winding must satisfy 0 < 2m < n (n={self.n}, m={self.winding})")
        if any(not 0.0 < a < math.pi for a in self.alphas):
            raise ValueError("interior angles must lie in (0, π)")
        if abs(sum(self.betas) - 2.0 * math.pi * self.winding) > ANGLE_SUM_TOL:
            raise ValueError("exterior angles do not sum to 2πm")
        if abs(sum(self.alphas) - math.pi * (self.n - 2 * self.winding)) > ANGLE_SUM_TOL:
            raise ValueError("interior angles do not sum to π(n − 2m)")
        return self


class TangencyPolygon(BaseModel):
    """接点（各辺の中点）がなす多角形"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    midpoints: list[Vec2] = Field(..., description="z_1..z_n")
    parallelogram_defect: float | None = Field(
        None, description="n=4 のとき ‖(z_2 − z_1) − (z_3 − z_4)‖"
    )
    midsegment_defects: list[float] = Field(
        default_factory=list,
        description="n=3 のとき中点線 z_{i+1}z_{i+2} と z_i での接線の平行性のずれ（sin）",
    )


class OrbitTable(BaseModel):
    """軌道CSVの内容"""

    model_config = ConfigDict(extra="forbid")

    rows: list[tuple[int, float, float, float, float, float]] = Field(
        default_factory=list, description="(index, x, y, theta_tangency, alpha, beta)"
    )
    winding: int | None = Field(None, description="回転数（閉じていない場合は None）")
    closure_residual: float = Field(..., ge=0.0, description="閉包残差")


class MonodromyComparison(BaseModel):
    """解析的モノドロミーと数値微分の比較（x_1 のフレーム座標）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(..., description="周期")
    m: int = Field(..., description="回転数")
    analytic: list[list[float]] = Field(..., description="R(α_n)A_n ⋯ R(α_1)A_1")
    numeric: list[list[float]] = Field(..., description="中心差分ヤコビアン（フレーム座標）")
    max_difference: float = Field(..., ge=0.0, description="成分ごとの差の最大値")
    determinant: float = Field(..., description="det（解析的）")
    trace: float = Field(..., description="tr（解析的）")
