"""結果ファイルの書き出し"""
import logging
from pathlib import Path

from .exceptions import OutputError

logger = logging.getLogger(__name__)


def write_text(path: str | Path, text: str, error_code: str) -> Path:
    """UTF-8 テキストを書き出す（親ディレクトリは作成）

    Raises:
        OutputError: 書き込みに失敗した場合
    """
    file_path = Path(path)
    try:
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error(f"Failed to write {file_path}: {e}")
        raise OutputError(
            f"Cannot write {file_path}: {e}",
            error_code=error_code,
            details={"path": str(file_path)},
        ) from e
    return file_path
