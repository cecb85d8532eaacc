"""コアモジュール - 設定、例外処理"""

from .config import Settings, get_settings, settings
from .exceptions import (
    BilliardLabError,
    FileOperationError,
    InvalidPeriodError,
    NoConvergenceError,
    OutputError,
    ValidationError,
)
from .files import write_text

__all__ = [
    # 設定
    "settings",
    "get_settings",
    "Settings",
    # 例外
    "BilliardLabError",
    "ValidationError",
    "NoConvergenceError",
    "InvalidPeriodError",
    "FileOperationError",
    "OutputError",
    # ファイル
    "write_text",
]
