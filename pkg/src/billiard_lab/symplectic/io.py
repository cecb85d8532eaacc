"""シンプレクティック軌道CSVの整形と書き出し

平面: ヘッダ ``index,t,x,y``。楕円体: ヘッダ ``index,x1,..,x2n``。
"""
import logging
from collections.abc import Sequence
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from ..core.config import settings
from ..core.files import write_text

logger = logging.getLogger(__name__)

PLANAR_CSV_HEADER = "index,t,x,y"


def _fmt(value: float) -> str:
    return f"{value:.{settings.csv_digits}g}"


def format_chord_csv(params: Sequence[float], points: ArrayLike) -> str:
    """平面軌道: パラメータ t_k と境界点 γ(t_k)"""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    lines = [PLANAR_CSV_HEADER]
    for i, (t, p) in enumerate(zip(params, pts, strict=True)):
        lines.append(f"{i},{_fmt(float(t))},{_fmt(float(p[0]))},{_fmt(float(p[1]))}")
    return "\n".join(lines) + "\n"


def format_points_csv(points: ArrayLike) -> str:
    """楕円体軌道: 各点の座標"""
    pts = np.asarray(points, dtype=np.float64)
    dim = pts.shape[1]
    lines = ["index," + ",".join(f"x{k + 1}" for k in range(dim))]
    for i, p in enumerate(pts):
        lines.append(f"{i}," + ",".join(_fmt(float(v)) for v in p))
    return "\n".join(lines) + "\n"


def write_symplectic_csv(text: str, path: str | Path) -> Path:
    """整形済みの CSV を書き出す

    Raises:
        OutputError: 書き込みに失敗した場合
    """
    file_path = write_text(path, text, "CSV_WRITE_FAILED")
    logger.info(f"Symplectic orbit CSV written to {file_path}")
    return file_path
