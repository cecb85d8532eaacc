"""アプリケーション設定管理"""
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# 環境変数を読み込み
load_dotenv()


class Settings(BaseSettings):
    """アプリケーション設定"""

    # アプリケーション基本設定
    app_name: str = "Billiard Lab"
    version: str = "0.1.0"
    log_level: str = Field(
        default="WARNING", alias="BILLIARD_LOG_LEVEL", description="ログレベル"
    )

    # 乱数・出力形式
    seed: int = Field(
        default=0, alias="BILLIARD_SEED", description="マルチスタート探索の乱数シード"
    )
    csv_digits: int = Field(default=17, ge=1, le=17, description="CSV出力の有効桁数")
    svg_curve_samples: int = Field(default=1024, ge=16, description="SVG描画時の曲線サンプル数")

    # 数値許容誤差
    periodicity_tol: float = Field(
        default=1e-8, ge=1e-14, description="周期軌道とみなす閉包残差（長さ単位）"
    )
    newton_tol: float = Field(default=1e-12, ge=1e-14, description="Newton法の収束判定（残差の最大ノルム）")
    newton_max_iter: int = Field(default=50, ge=1, description="Newton法の最大反復回数")
    fd_step: float = Field(default=1e-5, gt=0.0, description="検証用ヤコビアンの差分幅")
    jacobian_fd_step: float = Field(default=1e-6, gt=0.0, description="探索用ヤコビアンの差分幅")
    continuum_sv_tol: float = Field(
        default=1e-8, gt=0.0, description="連続族とみなすヤコビアン特異値の閾値"
    )
    dedup_tol: float = Field(default=1e-6, gt=0.0, description="軌道の重複判定（角度の最大差）")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", populate_by_name=True, extra="ignore"
    )


@lru_cache
def get_settings() -> Settings:
    """設定のシングルトンインスタンスを取得"""
    return Settings()


# グローバル設定インスタンス
settings = get_settings()
