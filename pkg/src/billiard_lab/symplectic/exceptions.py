"""シンプレクティックビリヤード関連の例外クラス"""

from ..core.exceptions import BilliardLabError


class SymplecticBilliardError(BilliardLabError):
    """シンプレクティックビリヤード 基底例外"""

    pass


class NoAdmissibleImageError(SymplecticBilliardError):
    """許容な像が存在しないエラー（接線方向の退化）"""

    pass


class NotClosedError(SymplecticBilliardError):
    """パラメータ列が閉じた軌道でないエラー"""

    pass


class DegenerateChordError(SymplecticBilliardError):
    """弦の長さが0のエラー"""

    pass


class TangentialChordError(SymplecticBilliardError):
    """特性方向の直線が境界に接していて写像が定義されないエラー"""

    pass
