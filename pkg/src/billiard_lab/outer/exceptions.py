"""外部ビリヤード関連の例外クラス"""

from ..core.exceptions import BilliardLabError


class OuterBilliardError(BilliardLabError):
    """外部ビリヤード 基底例外"""

    pass


class DegeneratePolygonError(OuterBilliardError):
    """軌道多角形が退化しているエラー"""

    pass


class OrbitNotClosedError(OuterBilliardError):
    """軌道が閉じていないエラー"""

    def __init__(self, residual: float, tolerance: float):
        super().__init__(
            f"Orbit is not closed: residual {residual:.3e} exceeds {tolerance:.1e}",
            error_code="ORBIT_NOT_CLOSED",
            details={"residual": residual, "tolerance": tolerance},
        )


class NotPeriodicError(OuterBilliardError):
    """点が指定周期の周期点でないエラー"""

    def __init__(self, n: int, residual: float, tolerance: float):
        super().__init__(
            f"Point is not {n}-periodic: residual {residual:.3e} exceeds {tolerance:.1e}",
            error_code="NOT_PERIODIC",
            details={"n": n, "residual": residual, "tolerance": tolerance},
        )
