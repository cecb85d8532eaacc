"""シンプレクティックビリヤード周期軌道の探索"""
import logging

import numpy as np

from ..core.config import settings
from ..core.exceptions import BilliardLabError, InvalidPeriodError, NoConvergenceError
from ..geometry.curve import CurveModel, to_vec2
from ..geometry.support import FloatArray
from ..symplectic.billiard import symplectic_residual
from .newton import damped_newton, fd_jacobian, smallest_singular_value
from .orbits import TWO_PI, OrbitCollector, admissible_lift, seed_thetas
from .schemas import SymplecticOrbit, SymplecticSearchReport

logger = logging.getLogger(__name__)


def symplectic_find_orbits(
    curve: CurveModel, n: int, grid_size: int = 16, m: int = 1, seed: int | None = None
) -> SymplecticSearchReport:
    """マルチスタート Newton 法で周期 n・回転数 m のシンプレクティック軌道を列挙

    Raises:
        InvalidPeriodError: n < 3 または 0 < 2m < n を満たさない場合
        NoConvergenceError: どの初期値からも収束しない場合
    """
    if n < 3:
        raise InvalidPeriodError(n, "symplectic orbits need n >= 3")
    if not 0 < 2 * m < n:
        raise InvalidPeriodError(n, f"rotation number m={m} must satisfy 0 < 2m < n")

    report = SymplecticSearchReport(n=n, m=m)
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    collector = OrbitCollector(report)

    def fn(t: FloatArray) -> FloatArray:
        return symplectic_residual(curve, t)

    for k in range(grid_size):
        report.seeds_tried += 1
        t0 = seed_thetas(rng, TWO_PI * k / grid_size, n, m, jitter=k > 0)
        try:
            result = damped_newton(fn, t0, lambda t: admissible_lift(t, m))
        except BilliardLabError as e:
            report.seeds_failed += 1
            logger.debug(f"Seed {k} failed: {e.message}")
            continue
        report.residual_history.append(result.history)
        params = result.x
        residual = float(np.max(np.abs(fn(params))))
        jacobian = fd_jacobian(fn, params, settings.jacobian_fd_step)
        on_continuum = smallest_singular_value(jacobian) < settings.continuum_sv_tol
        if collector.offer(k, params, on_continuum):
            report.orbits.append(
                SymplecticOrbit(
                    n=n,
                    winding=m,
                    params=params.tolist(),
                    points=[to_vec2(p) for p in curve.positions(params)],
                    residual=residual,
                )
            )

    if not report.orbits:
        raise NoConvergenceError(
            f"No symplectic {n}-periodic orbit found from {grid_size} seeds",
            error_code="NO_SYMPLECTIC_ORBIT",
            details={"n": n, "m": m, "seeds": grid_size},
        )
    if not report.continuum and len(report.orbits) < 2:
        msg = f"Only {len(report.orbits)} distinct symplectic {n}-orbits found"
        report.warnings.append(msg)
        logger.warning(msg)
    logger.info(
        f"symplectic_find_orbits n={n}, m={m}: {len(report.orbits)} orbits, "
        f"continuum={report.continuum}"
    )
    return report

