"""有限差分ヤコビアンによる減衰 Newton 法"""
import logging
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from ..core.config import settings
from ..core.exceptions import BilliardLabError, NoConvergenceError
from ..geometry.support import FloatArray
from .exceptions import SingularJacobianError

logger = logging.getLogger(__name__)

ResidualFn = Callable[[FloatArray], FloatArray]
AdmissibleFn = Callable[[FloatArray], bool]

MIN_STEP = 1.0 / 1024.0


@dataclass(frozen=True)
class NewtonResult:
    """Newton 反復の結果"""

    x: FloatArray
    history: list[float] = field(default_factory=list)
    singular: bool = False


def fd_jacobian(fn: ResidualFn, x: FloatArray, h: float) -> FloatArray:
    """中心差分ヤコビアン"""
    columns = []
    for j in range(len(x)):
        e = np.zeros_like(x)
        e[j] = h
        columns.append((fn(x + e) - fn(x - e)) / (2.0 * h))
    return np.column_stack(columns)


def smallest_singular_value(jacobian: FloatArray) -> float:
    """最小特異値"""
    return float(np.linalg.svd(jacobian, compute_uv=False)[-1])


def damped_newton(
    fn: ResidualFn,
    x0: FloatArray,
    admissible: AdmissibleFn,
    tol: float | None = None,
    max_iter: int | None = None,
) -> NewtonResult:
    """残差の最大ノルムが tol 未満になるまで Newton 法（後退ステップ付き）

    特異に近い方向は最小ノルム最小二乗解で切り捨てる。

    Raises:
        SingularJacobianError: 特異なヤコビアンで後退しても残差が減らない場合
        NoConvergenceError: 反復回数の上限に達した場合
    """
    tol = settings.newton_tol if tol is None else tol
    max_iter = settings.newton_max_iter if max_iter is None else max_iter
    h = settings.jacobian_fd_step

    x = np.array(x0, dtype=np.float64)
    r = fn(x)
    norm = float(np.max(np.abs(r)))
    history = [norm]
    singular = False

    for _ in range(max_iter):
        if norm < tol:
            return NewtonResult(x=x, history=history, singular=singular)

        jacobian = fd_jacobian(fn, x, h)
        sv = np.linalg.svd(jacobian, compute_uv=False)
        if sv[-1] < settings.continuum_sv_tol * max(1.0, float(sv[0])):
            if not singular:
                logger.debug(f"Near-singular Jacobian (σ_min={sv[-1]:.3e}); using damped step")
            singular = True
        step = np.linalg.lstsq(jacobian, -r, rcond=settings.continuum_sv_tol)[0]

        lam = 1.0
        accepted = False
        while lam >= MIN_STEP:
            trial = x + lam * step
            if admissible(trial):
                try:
                    r_trial = fn(trial)
                except BilliardLabError:
                    r_trial = None
                if r_trial is not None and np.all(np.isfinite(r_trial)):
                    trial_norm = float(np.max(np.abs(r_trial)))
                    if trial_norm < norm:
                        x, r, norm = trial, r_trial, trial_norm
                        accepted = True
                        break
            lam *= 0.5

        history.append(norm)
        if not accepted:
            if singular:
                raise SingularJacobianError(float(sv[-1]), norm)
            raise NoConvergenceError(
                f"Line search failed at residual {norm:.3e}",
                error_code="LINE_SEARCH_FAILED",
                details={"residual": norm, "history": history},
            )

    if norm < tol:
        return NewtonResult(x=x, history=history, singular=singular)
    raise NoConvergenceError(
        f"Newton iteration did not converge in {max_iter} steps (residual {norm:.3e})",
        error_code="NEWTON_MAX_ITER",
        details={"residual": norm, "history": history},
    )
