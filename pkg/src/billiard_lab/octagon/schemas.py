"""正八角形テーブル構成のPydanticスキーマ"""
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..geometry.schemas import Vec2


class CycleLine(str, Enum):
    """8周期点の線分が乗る直線"""

    X1X8 = "x1x8"  # h_1, z_2, h_3, z_4, h_5, z_6, h_7, z_8
    X1X2 = "x1x2"  # z_1, h_2, z_3, h_4, z_5, h_6, z_7, h_8


class HyperbolaArc(BaseModel):
    """漸近線座標で u·v = c と表される双曲線の弧

    点は O + u·u_dir + v·v_dir。接点 z_i の座標は (u_z, v_z)。
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    index: int = Field(..., ge=1, le=8, description="弧の番号 i")
    origin: Vec2 = Field(..., description="漸近線の交点 O")
    u_dir: Vec2 = Field(..., description="第1漸近線（直線 x_{i−1}x_i）の単位方向")
    v_dir: Vec2 = Field(..., description="第2漸近線（直線 x_{i+1}x_{i+2}）の単位方向")
    c: float = Field(..., gt=0.0, description="u·v = c")
    u_z: float = Field(..., gt=0.0, description="接点の u 座標")
    v_z: float = Field(..., gt=0.0, description="接点の v 座標")
    tangency: Vec2 = Field(..., description="接する辺の中点 z_i")
    arc_halfwidth: float = Field(..., gt=0.0, description="各漸近線座標で残す幅の半分")

    @model_validator(mode="after")
    def _check_tangency(self) -> "HyperbolaArc":
        if abs(self.u_z * self.v_z - self.c) > 1e-12 * max(1.0, self.c):
            raise ValueError("tangency coordinates do not satisfy u·v = c")
        px = self.origin[0] + self.u_z * self.u_dir[0] + self.v_z * self.v_dir[0]
        py = self.origin[1] + self.u_z * self.u_dir[1] + self.v_z * self.v_dir[1]
        if math.hypot(px - self.tangency[0], py - self.tangency[1]) > 1e-12 * (
            1.0 + math.hypot(*self.tangency)
        ):
            raise ValueError("tangency point does not lie on the hyperbola")
        return self


class OctagonTable(BaseModel):
    """正八角形と8本の双曲線弧"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    radius: float = Field(..., gt=0.0, description="外接円半径 R")
    vertices: list[Vec2] = Field(..., min_length=8, max_length=8, description="x_1..x_8")
    midpoints: list[Vec2] = Field(..., min_length=8, max_length=8, description="z_1..z_8")
    arcs: list[HyperbolaArc] = Field(..., min_length=8, max_length=8, description="h_1..h_8")


class EightCycle(BaseModel):
    """8周期点の軌道"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    line: CycleLine = Field(..., description="出発点の直線")
    offset: float = Field(..., description="x_1 からの符号付きずれ")
    points: list[Vec2] = Field(..., min_length=8, max_length=8, description="x_1'..x_8'")
    tangencies: list[Vec2] = Field(..., min_length=8, max_length=8, description="各ステップの接点")
    final: Vec2 = Field(..., description="8ステップ後の点")
    closure_residual: float = Field(..., ge=0.0, description="|final − x_1'|")
    symmetry_defect: float | None = Field(
        None, description="x1x8 の場合 ||x_1x_1'| − |x_4x_4'||"
    )


class OctagonSweep(BaseModel):
    """ずれを走査した閉包残差"""

    model_config = ConfigDict(extra="forbid")

    line: CycleLine
    offsets: list[float] = Field(default_factory=list)
    residuals: list[float] = Field(default_factory=list)
    symmetry_defects: list[float | None] = Field(default_factory=list)
    max_residual: float = 0.0


class ArcAudit(BaseModel):
    """弧ごとの監査結果"""

    model_config = ConfigDict(extra="forbid")

    index: int
    window: tuple[float, float] = Field(..., description="u の範囲")
    sector: tuple[float, float] = Field(..., description="中心から見た角度範囲")
    curvature_range: tuple[float, float] = Field(..., description="曲率の最小・最大")
    tangent_defect: float = Field(..., description="z_i での接線と辺のなす角の sin")


class AuditReport(BaseModel):
    """テーブル整合性の監査結果"""

    model_config = ConfigDict(extra="forbid")

    passed: bool
    violations: list[str] = Field(default_factory=list, description="違反コードと内容")
    arcs: list[ArcAudit] = Field(default_factory=list)


class OctagonReport(BaseModel):
    """octagon サブコマンドの出力"""

    model_config = ConfigDict(extra="forbid")

    table: OctagonTable
    audit: AuditReport
    sweeps: list[OctagonSweep] = Field(default_factory=list)
    cycles: list[EightCycle] = Field(default_factory=list, description="指定したずれでの軌道")
