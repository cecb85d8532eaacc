"""アプリケーション例外クラス"""
from typing import Any


class BilliardLabError(Exception):
    """ベース例外クラス"""

    def __init__(
        self, message: str, error_code: str | None = None, details: dict[str, Any] | None = None
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)


class ValidationError(BilliardLabError):
    """バリデーションエラー"""

    pass


class NoConvergenceError(BilliardLabError):
    """数値解法が収束しないエラー"""

    pass


class InvalidPeriodError(BilliardLabError):
    """周期・回転数の指定が不正なエラー"""

    def __init__(self, n: int, reason: str):
        super().__init__(
            f"Invalid period n={n}: {reason}",
            error_code="INVALID_PERIOD",
            details={"n": n},
        )


class FileOperationError(BilliardLabError):
    """ファイル操作エラー"""

    pass


class OutputError(FileOperationError):
    """結果ファイルの書き込みエラー"""

    pass
