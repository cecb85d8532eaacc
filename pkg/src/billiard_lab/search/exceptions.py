"""周期軌道探索関連の例外クラス"""

from ..core.exceptions import NoConvergenceError


class SingularJacobianError(NoConvergenceError):
    """ヤコビアンが特異で Newton 法が進めないエラー"""

    def __init__(self, smallest: float, residual: float):
        super().__init__(
            f"Jacobian is singular (smallest singular value {smallest:.3e}) "
            f"and the damped step does not reduce the residual {residual:.3e}",
            error_code="SINGULAR_JACOBIAN",
            details={"smallest_singular_value": smallest, "residual": residual},
        )
