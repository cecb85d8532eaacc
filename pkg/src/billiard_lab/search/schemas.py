"""周期軌道探索のPydanticスキーマ"""
import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..geometry.schemas import Vec2
from ..outer.schemas import OuterOrbit


class TangencyVector(BaseModel):
    """軌道の座標: 接点の法線角 θ_1..θ_n（回転数 m に合わせて持ち上げ済み）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    thetas: list[float] = Field(..., min_length=3, description="θ_1 < θ_2 < … < θ_n")
    winding: int = Field(..., ge=1, description="回転数 m")

    @model_validator(mode="after")
    def _check_lift(self) -> "TangencyVector":
        for i in range(len(self.thetas) - 1):
            if not self.thetas[i + 1] > self.thetas[i]:
                raise ValueError(f"thetas must increase strictly (index {i + 1})")
        if not self.thetas[-1] < self.thetas[0] + 2.0 * math.pi * self.winding:
            raise ValueError("lift is inconsistent with the winding: θ_n >= θ_1 + 2πm")
        return self

    @property
    def n(self) -> int:
        return len(self.thetas)


class SearchReport(BaseModel):
    """外部ビリヤード周期軌道の探索結果"""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., description="周期")
    m: int = Field(..., description="回転数")
    orbits: list[OuterOrbit] = Field(default_factory=list, description="重複を除いた軌道")
    continuum: bool = Field(default=False, description="1径数族を検出したか")
    multiple_cover: bool = Field(default=False, description="gcd(n, m) > 1 の多重被覆か")
    seeds_tried: int = Field(default=0, description="試した初期値の数")
    seeds_failed: int = Field(default=0, description="収束しなかった初期値の数")
    residual_history: list[list[float]] = Field(
        default_factory=list, description="初期値ごとの残差ノルム履歴"
    )
    dedup_log: list[str] = Field(default_factory=list, description="巡回シフトによる同一視の記録")
    warnings: list[str] = Field(default_factory=list, description="警告")


class SymplecticOrbit(BaseModel):
    """シンプレクティックビリヤードの周期軌道（パラメータの巡回列）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(..., ge=3, description="周期")
    winding: int = Field(..., ge=1, description="回転数")
    params: list[float] = Field(..., description="境界点の法線角 t_1..t_n（持ち上げ済み）")
    points: list[Vec2] = Field(..., description="境界点 γ(t_i)")
    residual: float = Field(..., ge=0.0, description="周期条件の残差の最大ノルム")

    @model_validator(mode="after")
    def _check_lengths(self) -> "SymplecticOrbit":
        if len(self.params) != self.n or len(self.points) != self.n:
            raise ValueError(f"params and points must have length n={self.n}")
        return self


class SymplecticSearchReport(BaseModel):
    """シンプレクティックビリヤード周期軌道の探索結果"""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., description="周期")
    m: int = Field(..., description="回転数")
    orbits: list[SymplecticOrbit] = Field(default_factory=list, description="重複を除いた軌道")
    continuum: bool = Field(default=False, description="1径数族を検出したか")
    seeds_tried: int = Field(default=0, description="試した初期値の数")
    seeds_failed: int = Field(default=0, description="収束しなかった初期値の数")
    residual_history: list[list[float]] = Field(default_factory=list, description="残差履歴")
    dedup_log: list[str] = Field(default_factory=list, description="同一視の記録")
    warnings: list[str] = Field(default_factory=list, description="警告")


class SearchSummary(BaseModel):
    """CLI 向けの探索サマリー"""

    model_config = ConfigDict(extra="forbid")

    n: int
    m: int
    orbits_found: int
    continuum: bool
