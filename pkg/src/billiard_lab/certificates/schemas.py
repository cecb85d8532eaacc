"""回転・シアー語と証明書のPydanticスキーマ"""
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Stage(str, Enum):
    """追跡段階"""

    SHEAR = "shear"
    ROTATION = "rotation"


class Verdict(str, Enum):
    """証明書の判定"""

    PROVEN_NOT_IDENTITY = "proven_not_identity"
    INCONCLUSIVE = "inconclusive"


class ShearRotationWord(BaseModel):
    """語 R(α_n)A_n ⋯ R(α_1)A_1 の文字列 (α_i, s_i)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    letters: list[tuple[float, float]] = Field(
        ..., min_length=1, description="(α_i, s_i) の列。α はラジアン"
    )

    @field_validator("letters")
    @classmethod
    def _check_letters(cls, letters: list[tuple[float, float]]) -> list[tuple[float, float]]:
        for i, (alpha, s) in enumerate(letters):
            if not 0.0 < alpha < math.pi:
                raise ValueError(f"letter {i}: alpha must lie in (0, π), got {alpha}")
            if not s > 0.0:
                raise ValueError(f"letter {i}: shear coefficient must be positive, got {s}")
        return letters

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def alpha_sum(self) -> float:
        return math.fsum(alpha for alpha, _ in self.letters)


class QuasiDirectionStep(BaseModel):
    """半直線追跡の1段階"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    stage: Stage = Field(..., description="適用した行列の種類")
    index: int = Field(..., ge=1, description="文字番号 i")
    angle: float = Field(..., description="連続に持ち上げた方向角")
    q: int = Field(..., ge=0, le=3, description="準方向")


class QuasiDirectionTrace(BaseModel):
    """半直線 (1,0) の追跡記録"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    steps: list[QuasiDirectionStep] = Field(default_factory=list, description="各段階の記録")
    total_rotation: float = Field(..., description="持ち上げた方向角の最終値")


class Certificate(BaseModel):
    """非恒等証明書"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    verdict: Verdict = Field(..., description="判定")
    alpha_sum: float = Field(..., description="Σα_i")
    trace: QuasiDirectionTrace = Field(..., description="準方向の追跡記録")
    product: tuple[tuple[float, float], tuple[float, float]] = Field(
        ..., description="語の積（照合用）"
    )
    identity_defect: float = Field(..., ge=0.0, description="‖積 − Id‖_max")
    note: str | None = Field(None, description="判定を保留した理由")
