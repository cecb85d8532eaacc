"""CLI実行設定のPydanticスキーマ"""
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from .exceptions import RunConfigError

MIN_TOLERANCE = 1e-14


class Command(str, Enum):
    """サブコマンド"""

    OUTER_ORBIT = "outer-orbit"
    SYMPLECTIC_ORBIT = "symplectic-orbit"
    FIND_PERIODIC = "find-periodic"
    THROUGH_TANGENCY = "through-tangency"
    MONODROMY = "monodromy"
    CERTIFY = "certify"
    IDENTITY_FAMILY = "identity-family"
    OCTAGON = "octagon"
    PLOT = "plot"


class SearchKind(str, Enum):
    """find-periodic の対象"""

    OUTER = "outer"
    SYMPLECTIC = "symplectic"


_REQUIRED: dict[Command, tuple[str, ...]] = {
    Command.OUTER_ORBIT: ("curve", "start"),
    Command.SYMPLECTIC_ORBIT: ("curve", "start"),
    Command.FIND_PERIODIC: ("curve", "n"),
    Command.THROUGH_TANGENCY: ("curve", "n"),
    Command.MONODROMY: ("curve", "n"),
    Command.CERTIFY: (),
    Command.IDENTITY_FAMILY: ("n",),
    Command.OCTAGON: (),
    Command.PLOT: ("curve",),
}


class RunConfig(BaseModel):
    """1回の実行設定（引数を検証済みの形で保持）"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command = Field(..., description="サブコマンド")

    # 入力ファイル
    curve: Path | None = Field(None, description="曲線・楕円体指定ファイル")
    word: Path | None = Field(None, description="語ファイル")
    orbit: Path | None = Field(None, description="描画する軌道CSV")

    # 数値オプション
    start: list[float] | None = Field(None, description="初期点・初期状態")
    second: list[float] | None = Field(None, description="楕円体の2点目 y")
    steps: int = Field(default=10, ge=0, description="反復回数")
    n: int | None = Field(None, ge=1, description="周期")
    m: int = Field(default=1, ge=1, description="回転数")
    grid: int | None = Field(None, ge=1, description="マルチスタートの初期値数")
    theta: float = Field(default=0.0, description="固定する接点の法線角")
    kind: SearchKind = Field(default=SearchKind.OUTER, description="探索対象")
    radius: float = Field(default=1.0, gt=0.0, description="八角形の外接円半径")
    halfwidth: float | None = Field(None, gt=0.0, description="双曲線弧の半幅")
    offset: float | None = Field(None, description="8周期点の x_1 からのずれ")
    count: int = Field(default=50, ge=2, description="走査するずれの数")
    line: str = Field(default="both", pattern="^(x1x8|x1x2|both)$", description="走査する直線")
    tolerance: float | None = Field(
        None, ge=MIN_TOLERANCE, description="周期性判定の許容誤差（上書き）"
    )
    seed: int | None = Field(None, description="乱数シード（上書き）")

    # 出力
    output: Path | None = Field(None, description="結果ファイル（省略時は標準出力）")
    csv: Path | None = Field(None, description="探索で見つかった最初の軌道のCSV")
    plot: Path | None = Field(None, description="SVG出力先")
    verbose: bool = Field(default=False, description="INFO ログを表示")

    @model_validator(mode="after")
    def _check_inputs(self) -> "RunConfig":
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command.value} requires --{', --'.join(missing)}")
        if self.command is Command.CERTIFY and self.word is None:
            if self.curve is None or self.n is None:
                raise ValueError("certify requires --word, or --curve with --n")
        for name in ("curve", "word", "orbit"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                raise ValueError(f"input file not found: {path}")
        return self


def build_run_config(values: dict[str, Any]) -> RunConfig:
    """argparse の結果から RunConfig を構築

    Raises:
        RunConfigError: 引数が不正な場合
    """
    try:
        return RunConfig.model_validate(values)
    except PydanticValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        message = f"{where}: {first['msg']}" if where else first["msg"]
        raise RunConfigError(
            f"Invalid arguments: {message}",
            error_code="INVALID_RUN_CONFIG",
            details={"errors": e.errors(include_url=False)},
        ) from e
