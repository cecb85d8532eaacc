"""回転・シアー語の積と準方向による非恒等証明"""
import logging
import math
from pathlib import Path

import numpy as np
from numpy.typing import NDArray
from pydantic import ValidationError as PydanticValidationError

from ..core.exceptions import InvalidPeriodError
from ..core.files import write_text
from ..geometry.curve import ConvexCurve
from ..outer.billiard import rotation, shear
from ..outer.schemas import OuterOrbit
from .exceptions import WordFileError
from .schemas import (
    Certificate,
    QuasiDirectionStep,
    QuasiDirectionTrace,
    ShearRotationWord,
    Stage,
    Verdict,
)

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
AXIS_TOL = 1e-14
ANGLE_SUM_SLACK = 1e-12
IDENTITY_TOL = 1e-12
WINDING_SUM_TOL = 1e-8
REPORT_IDENTITY_TOL = 1e-10


def word_product(word: ShearRotationWord) -> NDArray[np.float64]:
    """右から左への積 R(α_n)A_n ⋯ R(α_1)A_1"""
    product = np.eye(2)
    for alpha, s in word.letters:
        product = rotation(alpha) @ shear(s) @ product
    return product


def identity_family(n: int) -> ShearRotationWord:
    """α = (n−2)π/n, s = 4cot(2π/n) の定数語（積は恒等行列）

    Raises:
        InvalidPeriodError: n <= 4 の場合（cot(2π/n) <= 0）
    """
    if n < 5:
        raise InvalidPeriodError(n, "identity family needs n >= 5 since cot(2π/n) <= 0")
    alpha = (n - 2) * math.pi / n
    s = 4.0 / math.tan(TWO_PI / n)
    return ShearRotationWord(letters=[(alpha, s)] * n)


def quasi_direction(vx: float, vy: float) -> int:
    """半直線の準方向: 0 正の x 軸, 1 上半平面, 2 負の x 軸, 3 下半平面"""
    if abs(vy) <= AXIS_TOL:
        return 0 if vx > 0.0 else 2
    return 1 if vy > 0.0 else 3


def track_halfline(word: ShearRotationWord) -> QuasiDirectionTrace:
    """(1,0) が張る半直線を A_1, R(α_1), …, A_n, R(α_n) の順に追跡"""
    vx, vy = 1.0, 0.0
    angle = 0.0
    steps: list[QuasiDirectionStep] = []
    for i, (alpha, s) in enumerate(word.letters, start=1):
        wx, wy = vx + s * vy, vy
        norm = math.hypot(wx, wy)
        wx, wy = wx / norm, wy / norm
        angle += math.atan2(vx * wy - vy * wx, vx * wx + vy * wy)
        vx, vy = wx, wy
        steps.append(
            QuasiDirectionStep(stage=Stage.SHEAR, index=i, angle=angle, q=quasi_direction(vx, vy))
        )

        co, si = math.cos(alpha), math.sin(alpha)
        vx, vy = co * vx - si * vy, si * vx + co * vy
        angle += alpha
        steps.append(
            QuasiDirectionStep(
                stage=Stage.ROTATION, index=i, angle=angle, q=quasi_direction(vx, vy)
            )
        )
    return QuasiDirectionTrace(steps=steps, total_rotation=angle)


def certify_not_identity(word: ShearRotationWord) -> Certificate:
    """Σα_i <= 2π のとき半直線の回転量が 2π 未満であることで積 ≠ Id を示す

    判定が proven_not_identity でも積が数値的に恒等なら inconclusive に格下げする。
    """
    alpha_sum = word.alpha_sum
    trace = track_halfline(word)
    product = word_product(word)
    defect = float(np.max(np.abs(product - np.eye(2))))

    verdict = Verdict.INCONCLUSIVE
    note: str | None = None
    if alpha_sum > TWO_PI + ANGLE_SUM_SLACK:
        note = "angle sum exceeds 2π"
    elif not 0.0 < trace.total_rotation < TWO_PI:
        note = f"tracked halfline turned by {trace.total_rotation:.17g}"
    elif defect <= IDENTITY_TOL:
        note = "product is numerically the identity"
        logger.warning(
            f"Certificate downgraded: rotation {trace.total_rotation:.6g} < 2π "
            f"but product deviates from Id by only {defect:.3e}"
        )
    else:
        verdict = Verdict.PROVEN_NOT_IDENTITY

    return Certificate(
        verdict=verdict,
        alpha_sum=alpha_sum,
        trace=trace,
        product=(
            (float(product[0, 0]), float(product[0, 1])),
            (float(product[1, 0]), float(product[1, 1])),
        ),
        identity_defect=defect,
        note=note,
    )


def winding_sum_check(orbit: OuterOrbit) -> bool:
    """Σα_i = π(n − 2m) を 1e-8 で確認"""
    return abs(math.fsum(orbit.alphas) - math.pi * (orbit.n - 2 * orbit.winding)) < WINDING_SUM_TOL


def orbit_word(curve: ConvexCurve, orbit: OuterOrbit) -> ShearRotationWord:
    """軌道のモノドロミーを表す語（s_i = 2ρ_i / r_i）"""
    letters = []
    for x, theta, alpha in zip(orbit.vertices, orbit.tangencies, orbit.alphas, strict=True):
        z = curve.evaluate(theta)
        letters.append((alpha, 2.0 * z.rho / math.dist(x, z.position)))
    return ShearRotationWord(letters=letters)


def _pi_multiple(value: float) -> str:
    k = value / math.pi
    if abs(k - round(k)) < 1e-9:
        k_int = int(round(k))
        return "π" if k_int == 1 else f"{k_int}π"
    return f"{k:.6g}π"


def render_report(certificate: Certificate) -> str:
    """各段階・準方向・持ち上げ角を列挙したテキストレポート"""
    relation = ">" if certificate.alpha_sum > TWO_PI + ANGLE_SUM_SLACK else "≤"
    if certificate.identity_defect < REPORT_IDENTITY_TOL:
        product = "product = Id to 1e-10"
    else:
        product = f"product ≠ Id (max deviation {certificate.identity_defect:.3e})"
    lines = [
        f"{certificate.verdict.value} (Σα = {_pi_multiple(certificate.alpha_sum)} {relation} 2π); "
        f"{product}"
    ]
    if certificate.note:
        lines.append(f"note: {certificate.note}")
    lines.append(f"{'stage':<9} {'index':>5} {'q':>2}  angle")
    for step in certificate.trace.steps:
        lines.append(f"{step.stage.value:<9} {step.index:>5} {step.q:>2}  {step.angle:.17g}")
    lines.append(f"total_rotation = {certificate.trace.total_rotation:.17g}")
    (a, b), (c, d) = certificate.product
    lines.append(f"product = [[{a:.17g}, {b:.17g}], [{c:.17g}, {d:.17g}]]")
    return "\n".join(lines) + "\n"


def dump_word(word: ShearRotationWord) -> str:
    """語を JSON テキストに変換"""
    return word.model_dump_json(indent=2) + "\n"


def parse_word(text: str) -> ShearRotationWord:
    """JSON テキストから語を構築

    Raises:
        WordFileError: JSON として不正、または語の不変条件を満たさない場合
    """
    try:
        return ShearRotationWord.model_validate_json(text)
    except PydanticValidationError as e:
        raise WordFileError(
            f"Invalid word: {e.errors()[0]['msg']}",
            error_code="INVALID_WORD",
            details={"errors": e.errors(include_url=False)},
        ) from e


def load_word(path: str | Path) -> ShearRotationWord:
    """語ファイル {"letters": [[α, s], ...]} を読み込む"""
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise WordFileError(
            f"Cannot read word file {file_path}: {e}",
            error_code="WORD_FILE_UNREADABLE",
            details={"path": str(file_path)},
        ) from e
    return parse_word(text)


def save_word(word: ShearRotationWord, path: str | Path) -> Path:
    """語ファイルを書き出す"""
    file_path = write_text(path, dump_word(word), "WORD_FILE_UNWRITABLE")
    logger.info(f"Word with {word.n} letters written to {file_path}")
    return file_path
