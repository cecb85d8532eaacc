"""コアモジュールのテスト"""
from pathlib import Path

import pytest

from billiard_lab.core import (
    BilliardLabError,
    InvalidPeriodError,
    OutputError,
    Settings,
    get_settings,
    settings,
    write_text,
)


class TestSettings:
    """Settings のテスト"""

    def test_defaults(self) -> None:
        """既定の許容誤差のテスト"""
        fresh = Settings()
        assert fresh.periodicity_tol == 1e-8
        assert fresh.newton_tol == 1e-12
        assert fresh.fd_step == 1e-5
        assert fresh.continuum_sv_tol == 1e-8
        assert fresh.svg_curve_samples == 1024
        assert fresh.csv_digits == 17

    def test_env_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """環境変数による上書きのテスト"""
        monkeypatch.setenv("BILLIARD_SEED", "7")
        monkeypatch.setenv("BILLIARD_LOG_LEVEL", "DEBUG")
        fresh = Settings()
        assert fresh.seed == 7
        assert fresh.log_level == "DEBUG"

    def test_tolerance_lower_bound(self) -> None:
        """許容誤差の下限のテスト"""
        with pytest.raises(ValueError):
            Settings(periodicity_tol=1e-20)

    def test_singleton(self) -> None:
        """設定インスタンスが共有されるテスト"""
        assert get_settings() is settings

    def test_fields_are_used(self) -> None:
        """設定項目はログ・乱数・出力形式・許容誤差のみ"""
        assert "debug" not in Settings.model_fields
        assert {"log_level", "seed", "periodicity_tol"} <= set(Settings.model_fields)


class TestExceptions:
    """例外クラスのテスト"""

    def test_base_error_attributes(self) -> None:
        """基底例外の属性のテスト"""
        error = BilliardLabError("boom", error_code="BOOM", details={"x": 1})
        assert str(error) == "boom"
        assert error.message == "boom"
        assert error.error_code == "BOOM"
        assert error.details == {"x": 1}

    def test_base_error_defaults(self) -> None:
        """基底例外の既定値のテスト"""
        error = BilliardLabError("plain")
        assert error.error_code is None
        assert error.details == {}

    def test_invalid_period(self) -> None:
        """周期エラーのテスト"""
        error = InvalidPeriodError(4, "too small")
        assert isinstance(error, BilliardLabError)
        assert error.error_code == "INVALID_PERIOD"
        assert error.details == {"n": 4}
        assert "n=4" in error.message


class TestWriteText:
    """write_text のテスト"""

    def test_creates_parent_directories(self, tmp_path: Path) -> None:
        """親ディレクトリ作成のテスト"""
        target = tmp_path / "a" / "b" / "out.txt"
        result = write_text(target, "hello\n", "TEST_WRITE")
        assert result == target
        assert target.read_text(encoding="utf-8") == "hello\n"

    def test_unwritable_path(self, tmp_path: Path) -> None:
        """書き込めないパスのテスト"""
        with pytest.raises(OutputError) as exc_info:
            write_text(tmp_path, "x", "TEST_WRITE")
        assert exc_info.value.error_code == "TEST_WRITE"
        assert exc_info.value.details["path"] == str(tmp_path)
