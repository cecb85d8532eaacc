"""曲線幾何関連の例外クラス"""

from ..core.exceptions import BilliardLabError


class GeometryError(BilliardLabError):
    """曲線幾何 基底例外"""

    pass


class CurveSpecError(GeometryError):
    """曲線指定エラー（強凸性違反など）"""

    pass


class PointInsideBodyError(GeometryError):
    """点が凸体の内部（または境界上）にあるエラー"""

    def __init__(self, point: tuple[float, float], excess: float):
        on_boundary = abs(excess) <= 1e-12
        super().__init__(
            f"Point ({point[0]:.6g}, {point[1]:.6g}) is "
            f"{'on the boundary of' if on_boundary else 'inside'} the body "
            f"(support excess {excess:.3e})",
            error_code="POINT_ON_BOUNDARY" if on_boundary else "POINT_INSIDE_BODY",
            details={"point": point, "excess": excess},
        )


class ParallelTangentsError(GeometryError):
    """接線が平行で交点が存在しないエラー"""

    def __init__(self, theta_a: float, theta_b: float):
        super().__init__(
            f"Tangent lines at theta={theta_a:.6g} and theta={theta_b:.6g} are parallel",
            error_code="PARALLEL_TANGENTS",
            details={"theta_a": theta_a, "theta_b": theta_b},
        )
