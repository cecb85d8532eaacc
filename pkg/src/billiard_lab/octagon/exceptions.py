"""八角形構成関連の例外クラス"""

from ..core.exceptions import BilliardLabError


class OctagonError(BilliardLabError):
    """八角形構成 基底例外"""

    pass


class OutsideWindowError(OctagonError):
    """接点が残した弧の範囲外にあるエラー"""

    def __init__(self, arc_index: int, u0: float, window: tuple[float, float]):
        super().__init__(
            f"Tangency u={u0:.6g} leaves the retained window "
            f"[{window[0]:.6g}, {window[1]:.6g}] of arc h_{arc_index}",
            error_code="OUTSIDE_WINDOW",
            details={"arc": arc_index, "u0": u0, "window": window},
        )
