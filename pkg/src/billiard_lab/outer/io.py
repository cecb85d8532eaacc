"""軌道CSVの書き出しと読み込み

形式: ヘッダ ``index,x,y,theta_tangency,alpha,beta``、頂点ごとに1行、
末尾にコメント行 ``# winding m=..`` と ``# closure_residual=..``。
"""
import logging
import math
import re
from pathlib import Path

import numpy as np

from ..core.config import settings
from ..core.exceptions import FileOperationError
from ..core.files import write_text
from ..geometry.curve import ConvexCurve, as_point
from ..geometry.schemas import Vec2
from .billiard import iterate
from .schemas import OrbitTable, OuterOrbit

logger = logging.getLogger(__name__)

CSV_HEADER = "index,x,y,theta_tangency,alpha,beta"
_WINDING_RE = re.compile(r"#\s*winding\s+(?:m=(\d+)|open)")
_RESIDUAL_RE = re.compile(r"#\s*closure_residual=(\S+)")


def _turn(a: Vec2, b: Vec2, c: Vec2) -> float:
    """頂点 b での外角（a→b と b→c のなす符号付き角）"""
    ux, uy = b[0] - a[0], b[1] - a[1]
    vx, vy = c[0] - b[0], c[1] - b[1]
    return math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)


def trajectory_table(curve: ConvexCurve, x: Vec2, steps: int) -> OrbitTable:
    """x_0 から steps 回写像した軌道表（steps + 1 行）

    行 i の alpha/beta は頂点 x_{i+1} での角。x_steps が x_0 に閉包残差内で
    戻れば回転数を記録する。
    """
    trajectory = iterate(curve, x, steps + 2)
    points = [trajectory[0].x] + [step.y for step in trajectory]
    rows: list[tuple[int, float, float, float, float, float]] = []
    for i in range(steps + 1):
        beta = _turn(points[i], points[i + 1], points[i + 2])
        rows.append(
            (i, points[i][0], points[i][1], trajectory[i].z.theta, math.pi - beta, beta)
        )

    residual = float(np.linalg.norm(as_point(points[steps]) - as_point(points[0])))
    winding: int | None = None
    if steps >= 3 and residual <= settings.periodicity_tol:
        winding = int(round(sum(row[5] for row in rows[:steps]) / (2.0 * math.pi)))
    return OrbitTable(rows=rows, winding=winding, closure_residual=residual)


def orbit_table(orbit: OuterOrbit) -> OrbitTable:
    """閉軌道の表（頂点ごとに1行）"""
    rows = [
        (i, v[0], v[1], theta, alpha, beta)
        for i, (v, theta, alpha, beta) in enumerate(
            zip(orbit.vertices, orbit.tangencies, orbit.alphas, orbit.betas, strict=True)
        )
    ]
    return OrbitTable(rows=rows, winding=orbit.winding, closure_residual=orbit.closure_residual)


def format_table(table: OrbitTable) -> str:
    """CSV 本文を文字列として整形"""
    fmt = f"%.{settings.csv_digits}g"
    lines = [CSV_HEADER]
    for row in table.rows:
        lines.append(",".join([str(row[0])] + [fmt % value for value in row[1:]]))
    winding = "open" if table.winding is None else f"m={table.winding}"
    lines.append(f"# winding {winding}")
    lines.append(f"# closure_residual={fmt % table.closure_residual}")
    return "\n".join(lines) + "\n"


def write_orbit_csv(table: OrbitTable, path: str | Path) -> Path:
    """軌道表を CSV に書き出す

    Raises:
        OutputError: 書き込みに失敗した場合
    """
    file_path = write_text(path, format_table(table), "CSV_WRITE_FAILED")
    logger.info(f"Orbit CSV written to {file_path} ({len(table.rows)} rows)")
    return file_path


def read_orbit_csv(path: str | Path) -> OrbitTable:
    """軌道 CSV を読み込む

    Raises:
        FileOperationError: ファイルが読めない、または形式が不正な場合
    """
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
        data = np.loadtxt(file_path, delimiter=",", skiprows=1, comments="#", ndmin=2)
    except (OSError, ValueError) as e:
        raise FileOperationError(
            f"Cannot read orbit CSV {file_path}: {e}",
            error_code="CSV_READ_FAILED",
            details={"path": str(file_path)},
        ) from e

    if data.size and data.shape[1] != 6:
        raise FileOperationError(
            f"Orbit CSV {file_path} has {data.shape[1]} columns, expected 6",
            error_code="CSV_BAD_COLUMNS",
            details={"path": str(file_path)},
        )

    winding: int | None = None
    residual = 0.0
    for line in text.splitlines():
        if match := _WINDING_RE.match(line):
            winding = int(match.group(1)) if match.group(1) else None
        elif match := _RESIDUAL_RE.match(line):
            residual = float(match.group(1))

    rows = [
        (int(r[0]), float(r[1]), float(r[2]), float(r[3]), float(r[4]), float(r[5]))
        for r in data
    ]
    return OrbitTable(rows=rows, winding=winding, closure_residual=residual)


def table_points(table: OrbitTable) -> list[Vec2]:
    """表の頂点座標列"""
    return [(row[1], row[2]) for row in table.rows]
