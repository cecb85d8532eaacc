"""証明書関連の例外クラス"""

from ..core.exceptions import BilliardLabError


class CertificateError(BilliardLabError):
    """証明書 基底例外"""

    pass


class WordFileError(CertificateError):
    """語ファイルの読み書きエラー"""

    pass
