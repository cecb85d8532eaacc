"""テスト設定とフィクスチャ"""
# アプリケーションのインポート前に環境変数を設定
import os

os.environ.setdefault("BILLIARD_SEED", "0")
os.environ.setdefault("BILLIARD_LOG_LEVEL", "WARNING")

import json
from pathlib import Path

import pytest

from billiard_lab.geometry import CircleSpec, CurveModel, EllipseSpec, SupportFourierSpec
from billiard_lab.octagon import OctagonTable, build_table

FOURIER_SPEC = {"type": "support_fourier", "a0": 1.0, "terms": [[2, 0.05, 0.0], [3, 0.0, 0.02]]}


@pytest.fixture
def circle() -> CurveModel:
    """単位円"""
    return CurveModel(CircleSpec(radius=1.0))


@pytest.fixture
def ellipse() -> CurveModel:
    """楕円 a=2, b=1"""
    return CurveModel(EllipseSpec(a=2.0, b=1.0))


@pytest.fixture
def fourier_curve() -> CurveModel:
    """円を摂動した支持関数フーリエ曲線"""
    return CurveModel(SupportFourierSpec.model_validate(FOURIER_SPEC))


@pytest.fixture
def octagon_table() -> OctagonTable:
    """R=1 の八角形テーブル（既定の弧の幅）"""
    return build_table(1.0)


def _write_json(path: Path, data: dict[str, object]) -> Path:
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.fixture
def circle_file(tmp_path: Path) -> Path:
    """単位円の曲線指定ファイル"""
    return _write_json(tmp_path / "circle.json", {"type": "circle", "radius": 1.0})


@pytest.fixture
def ellipse_file(tmp_path: Path) -> Path:
    """楕円の曲線指定ファイル"""
    return _write_json(tmp_path / "ellipse.json", {"type": "ellipse", "a": 2.0, "b": 1.0})


@pytest.fixture
def fourier_file(tmp_path: Path) -> Path:
    """フーリエ曲線の指定ファイル"""
    return _write_json(tmp_path / "fourier.json", FOURIER_SPEC)


@pytest.fixture
def sphere_file(tmp_path: Path) -> Path:
    """R^4 の単位球の指定ファイル"""
    eye = [[1.0 if i == j else 0.0 for j in range(4)] for i in range(4)]
    return _write_json(tmp_path / "sphere.json", {"type": "ellipsoid", "Q": eye})
