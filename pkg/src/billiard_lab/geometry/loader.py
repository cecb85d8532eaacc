"""曲線指定ファイルの読み込み"""
import logging
from pathlib import Path

from pydantic import TypeAdapter
from pydantic import ValidationError as PydanticValidationError

from .curve import CurveModel
from .exceptions import CurveSpecError
from .schemas import CurveSpec

logger = logging.getLogger(__name__)

_curve_spec_adapter: TypeAdapter[CurveSpec] = TypeAdapter(CurveSpec)


def parse_curve_spec(text: str) -> CurveSpec:
    """JSON テキストを曲線指定に変換"""
    try:
        return _curve_spec_adapter.validate_json(text)
    except PydanticValidationError as e:
        raise CurveSpecError(
            f"Invalid curve spec: {e.errors()[0]['msg']}",
            error_code="INVALID_CURVE_SPEC",
            details={"errors": e.errors(include_url=False)},
        ) from e


def load_curve(path: str | Path) -> CurveModel:
    """曲線指定ファイル（UTF-8, JSON）を読み込んで CurveModel を構築

    Raises:
        CurveSpecError: ファイルが読めない、指定が不正、または強凸性を満たさない場合
    """
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise CurveSpecError(
            f"Cannot read curve spec {file_path}: {e}",
            error_code="CURVE_SPEC_UNREADABLE",
            details={"path": str(file_path)},
        ) from e

    curve = CurveModel(parse_curve_spec(text))
    logger.info(f"Curve loaded from {file_path}: {curve.kind.value}")
    return curve
