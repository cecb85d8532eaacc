"""CLI関連の例外クラス"""

from ..core.exceptions import ValidationError


class RunConfigError(ValidationError):
    """実行設定（引数・パス・許容誤差）の不正"""

    pass
