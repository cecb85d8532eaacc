"""R^{2n} の中心楕円体上のシンプレクティックビリヤード写像（閉形式）"""
import logging
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import ValidationError as PydanticValidationError

from .exceptions import SymplecticBilliardError, TangentialChordError
from .schemas import Ellipsoid2n, FourPeriodicCandidate2n

logger = logging.getLogger(__name__)

BOUNDARY_TOL = 1e-10
TANGENTIAL_TOL = 1e-12
CLOSURE_TOL = 1e-10

FloatArray = NDArray[np.float64]


def shape_matrix(body: Ellipsoid2n) -> FloatArray:
    """形状行列 Q"""
    return np.asarray(body.Q, dtype=np.float64)


def complex_structure(dim: int) -> FloatArray:
    """標準複素構造 J = [[0, I], [−I, 0]]"""
    n = dim // 2
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def characteristic_direction(body: Ellipsoid2n, y: ArrayLike) -> FloatArray:
    """y における特性方向 J·Q·y"""
    q = shape_matrix(body)
    return complex_structure(body.dim) @ q @ np.asarray(y, dtype=np.float64)


def _boundary_point(body: Ellipsoid2n, p: ArrayLike, name: str) -> FloatArray:
    v = np.asarray(p, dtype=np.float64).reshape(-1)
    if v.shape != (body.dim,):
        raise SymplecticBilliardError(
            f"Point {name} has dimension {v.size}, expected {body.dim}",
            error_code="DIMENSION_MISMATCH",
            details={"point": name},
        )
    level = float(v @ shape_matrix(body) @ v)
    if abs(level - 1.0) > BOUNDARY_TOL:
        raise SymplecticBilliardError(
            f"Point {name} is not on the boundary (x·Qx = {level:.12g})",
            error_code="NOT_ON_BOUNDARY",
            details={"point": name, "level": level},
        )
    return v


def symplectic_map_2n(body: Ellipsoid2n, x: ArrayLike, y: ArrayLike) -> FloatArray:
    """z = x + t·d, d = JQy, t = −2(x·Qd)/(d·Qd)（直線と楕円体の2番目の交点）

    Raises:
        TangentialChordError: |x·Qd| < 1e-12 の場合
    """
    xv = _boundary_point(body, x, "x")
    yv = _boundary_point(body, y, "y")
    d = characteristic_direction(body, yv)
    qd = shape_matrix(body) @ d
    xqd = float(xv @ qd)
    if abs(xqd) < TANGENTIAL_TOL:
        raise TangentialChordError(
            f"Characteristic line through x is tangent to the ellipsoid (x·Qd = {xqd:.3e})",
            error_code="TANGENTIAL_CHORD",
            details={"x_qd": xqd},
        )
    t = -2.0 * xqd / float(d @ qd)
    return xv + t * d


def iterate_2n(body: Ellipsoid2n, x: ArrayLike, y: ArrayLike, steps: int) -> list[FloatArray]:
    """点列 x, y, z_1, …, z_steps"""
    points = [np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)]
    for _ in range(steps):
        points.append(symplectic_map_2n(body, points[-2], points[-1]))
    return points


def _parallel_defect(u: FloatArray, v: FloatArray) -> float:
    """u と v のなす角の sin"""
    uu = float(u @ u)
    vv = float(v @ v)
    if uu == 0.0 or vv == 0.0:
        return 1.0
    r = v - (float(u @ v) / uu) * u
    return float(np.linalg.norm(r)) / float(np.sqrt(vv))


def four_periodic_through_2n(body: Ellipsoid2n, a: ArrayLike) -> FourPeriodicCandidate2n:
    """A を通る4周期軌道の唯一の候補: C = −A, B ∝ (JQ)⁻¹(C − A), D = −B"""
    av = _boundary_point(body, a, "A")
    q = shape_matrix(body)
    jq = complex_structure(body.dim) @ q
    c = -av
    w = np.linalg.solve(jq, c - av)
    b = w / float(np.sqrt(w @ q @ w))
    d = -b

    vertices = [av, b, c, d]
    residuals = [
        _parallel_defect(jq @ vertices[i], vertices[(i + 1) % 4] - vertices[i - 1])
        for i in range(4)
    ]
    closure = max(residuals)
    return FourPeriodicCandidate2n(
        vertices=[v.tolist() for v in vertices],
        residuals=residuals,
        closure_residual=closure,
        closes=closure < CLOSURE_TOL,
    )


def ellipse_as_ellipsoid(a: float, b: float) -> Ellipsoid2n:
    """平面楕円 x²/a² + y²/b² = 1 を n = 1 の楕円体として表す"""
    return Ellipsoid2n(Q=[[1.0 / (a * a), 0.0], [0.0, 1.0 / (b * b)]])


def parse_ellipsoid(text: str) -> Ellipsoid2n:
    """JSON テキストから楕円体を構築"""
    try:
        return Ellipsoid2n.model_validate_json(text)
    except PydanticValidationError as e:
        raise SymplecticBilliardError(
            f"Invalid ellipsoid spec: {e.errors()[0]['msg']}",
            error_code="INVALID_ELLIPSOID_SPEC",
            details={"errors": e.errors(include_url=False)},
        ) from e


def load_ellipsoid(path: str | Path) -> Ellipsoid2n:
    """楕円体指定ファイル {"type": "ellipsoid", "Q": [[...], ...]} を読み込む"""
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise SymplecticBilliardError(
            f"Cannot read ellipsoid spec {file_path}: {e}",
            error_code="ELLIPSOID_SPEC_UNREADABLE",
            details={"path": str(file_path)},
        ) from e
    body = parse_ellipsoid(text)
    logger.info(f"Ellipsoid of dimension {body.dim} loaded from {file_path}")
    return body
