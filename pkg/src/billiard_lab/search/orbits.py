"""接点法線角を未知数とする外部ビリヤード周期軌道の探索"""
import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy.optimize import least_squares

from ..certificates.certify import winding_sum_check
from ..core.config import settings
from ..core.exceptions import BilliardLabError, NoConvergenceError
from ..geometry.curve import PARALLEL_TOL, CurveModel, unit_normal, unit_tangent
from ..geometry.exceptions import ParallelTangentsError
from ..geometry.support import FloatArray
from ..outer.billiard import orbit_from_points
from ..outer.schemas import OuterOrbit
from .newton import damped_newton, fd_jacobian, smallest_singular_value
from .schemas import SearchReport, SearchSummary, SymplecticSearchReport, TangencyVector

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
ACCEPT_RESIDUAL = 1e-10
SEED_JITTER = 0.2
PENALTY = 1e3


def admissible_lift(thetas: FloatArray, m: int) -> bool:
    """隣接する角の差（閉じる差を含む）がすべて (0, π) にあるか"""
    gaps = np.diff(np.append(thetas, thetas[0] + TWO_PI * m))
    return bool(np.all(gaps > 0.0) and np.all(gaps < math.pi))


def _vertices(curve: CurveModel, thetas: FloatArray) -> FloatArray:
    prev = np.roll(thetas, 1)
    det = np.sin(thetas - prev)
    if np.any(np.abs(det) < PARALLEL_TOL):
        i = int(np.argmin(np.abs(det)))
        raise ParallelTangentsError(float(prev[i]), float(thetas[i]))
    h, _, _ = curve.support_value(thetas)
    p = h + unit_normal(thetas) @ curve.center
    p_prev = np.roll(p, 1)
    x = (p_prev * np.sin(thetas) - p * np.sin(prev)) / det
    y = (p * np.cos(prev) - p_prev * np.cos(thetas)) / det
    return np.column_stack([x, y])


def _residual(curve: CurveModel, thetas: FloatArray) -> FloatArray:
    vertices = _vertices(curve, thetas)
    mids = 0.5 * (vertices + np.roll(vertices, -1, axis=0))
    return np.sum((curve.positions(thetas) - mids) * unit_tangent(thetas), axis=1)


def circumscribed_vertices(curve: CurveModel, tv: TangencyVector) -> FloatArray:
    """x_i = θ_{i−1} と θ_i での接線の交点（添字は巡回）

    Raises:
        ParallelTangentsError: 隣接する接線が平行な場合
    """
    return _vertices(curve, np.asarray(tv.thetas, dtype=np.float64))


def midpoint_residual(curve: CurveModel, tv: TangencyVector) -> FloatArray:
    """成分 i = (γ(θ_i) − (x_i + x_{i+1})/2)·T(θ_i)。零ベクトルなら (n, m)-軌道"""
    return _residual(curve, np.asarray(tv.thetas, dtype=np.float64))


def orbit_from_thetas(curve: CurveModel, thetas: FloatArray) -> OuterOrbit:
    """接点角から軌道を構築（閉包残差は写像の再適用で測る）"""
    return orbit_from_points(curve, _vertices(curve, thetas))


def solve_tangency(
    curve: CurveModel, tv0: TangencyVector, max_iter: int | None = None
) -> tuple[TangencyVector, list[float]]:
    """中点条件を Newton 法で解き、持ち上げを保った解と残差履歴を返す"""
    thetas0 = np.asarray(tv0.thetas, dtype=np.float64)
    _vertices(curve, thetas0)
    m = tv0.winding
    result = damped_newton(
        lambda t: _residual(curve, t),
        thetas0,
        lambda t: admissible_lift(t, m),
        max_iter=max_iter,
    )
    return TangencyVector(thetas=result.x.tolist(), winding=m), result.history


def newton_solve(curve: CurveModel, tv0: TangencyVector, max_iter: int | None = None) -> OuterOrbit:
    """減衰 Newton 法で (n, m)-軌道を求める

    Raises:
        ParallelTangentsError: 初期値の接線が平行な場合（反復前）
        NoConvergenceError: 収束しない場合
    """
    tv, history = solve_tangency(curve, tv0, max_iter)
    orbit = orbit_from_thetas(curve, np.asarray(tv.thetas))
    if not winding_sum_check(orbit):
        raise NoConvergenceError(
            "Converged polygon violates the winding-sum identity",
            error_code="WINDING_SUM_MISMATCH",
            details={"alphas": orbit.alphas, "winding": orbit.winding},
        )
    logger.info(
        f"Newton converged to ({orbit.n},{orbit.winding})-orbit in {len(history) - 1} steps"
    )
    return orbit


def track_homotopy(
    curves: Sequence[CurveModel], tv0: TangencyVector
) -> list[TangencyVector]:
    """曲線の列に沿って解を追跡（各段は直前の解から出発）"""
    path: list[TangencyVector] = []
    tv = tv0
    for curve in curves:
        tv, _ = solve_tangency(curve, tv)
        path.append(tv)
    return path


def cyclic_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """巡回シフトについての min ‖Δθ mod 2π‖_∞"""
    ua = np.asarray(a, dtype=np.float64)
    ub = np.asarray(b, dtype=np.float64)
    if len(ua) != len(ub):
        return math.inf
    best = math.inf
    for k in range(len(ub)):
        d = (ua - np.roll(ub, k) + math.pi) % TWO_PI - math.pi
        best = min(best, float(np.max(np.abs(d))))
    return best


def _check_period(n: int, m: int) -> str | None:
    if n < 3 or m < 1:
        return f"(n, m)=({n},{m}) excluded: need n >= 3 and m >= 1"
    if 2 * m == n:
        return f"(n, m)=({n},{m}) excluded: degenerate cover of (2,1) since 2m = n"
    if 2 * m > n:
        return f"(n, m)=({n},{m}) excluded: 0 < 2m < n violated"
    return None


def seed_thetas(
    rng: np.random.Generator, phase: float, n: int, m: int, jitter: bool
) -> FloatArray:
    """等間隔の初期値（jitter なら摂動を加える）"""
    gap = TWO_PI * m / n
    thetas = phase + gap * np.arange(n)
    if jitter:
        perturbed = thetas + rng.uniform(-SEED_JITTER, SEED_JITTER, n) * gap
        if admissible_lift(perturbed, m):
            return perturbed
    return thetas


class OrbitCollector:
    """重複と連続族を除いて軌道を集める"""

    def __init__(self, report: SearchReport | SymplecticSearchReport):
        self.report = report
        self.keys: list[FloatArray] = []
        self.family_seen = False

    def offer(self, seed: int, thetas: FloatArray, on_continuum: bool) -> bool:
        if on_continuum:
            if self.family_seen:
                self.report.dedup_log.append(f"seed {seed}: member of the detected family")
                return False
            self.family_seen = True
            self.report.continuum = True
            logger.info(f"Continuum of periodic orbits detected at seed {seed}")
        for j, key in enumerate(self.keys):
            d = cyclic_distance(key, thetas % TWO_PI)
            if d < settings.dedup_tol:
                self.report.dedup_log.append(
                    f"seed {seed}: cyclic shift of orbit {j} (distance {d:.2e})"
                )
                return False
        self.keys.append(thetas % TWO_PI)
        return True


def find_orbits(
    curve: CurveModel, n: int, m: int, grid_size: int = 32, seed: int | None = None
) -> SearchReport:
    """マルチスタート Newton 法で (n, m)-軌道を列挙"""
    report = SearchReport(n=n, m=m)
    excluded = _check_period(n, m)
    if excluded:
        report.multiple_cover = n >= 2 and m >= 1 and math.gcd(n, m) > 1
        report.warnings.append(excluded)
        logger.warning(excluded)
        return report
    if math.gcd(n, m) > 1:
        report.multiple_cover = True
        msg = f"(n, m)=({n},{m}) has gcd {math.gcd(n, m)}: multiple covers are included"
        report.warnings.append(msg)
        logger.warning(msg)

    rng = np.random.default_rng(settings.seed if seed is None else seed)
    collector = OrbitCollector(report)
    for k in range(grid_size):
        report.seeds_tried += 1
        thetas0 = seed_thetas(rng, TWO_PI * k / grid_size, n, m, jitter=k > 0)
        try:
            tv, history = solve_tangency(curve, TangencyVector(thetas=thetas0.tolist(), winding=m))
            report.residual_history.append(history)
            thetas = np.asarray(tv.thetas)
            orbit = orbit_from_thetas(curve, thetas)
        except BilliardLabError as e:
            report.seeds_failed += 1
            logger.debug(f"Seed {k} failed: {e.message}")
            continue
        if orbit.closure_residual >= ACCEPT_RESIDUAL or not winding_sum_check(orbit):
            report.seeds_failed += 1
            continue
        jacobian = fd_jacobian(lambda t: _residual(curve, t), thetas, settings.jacobian_fd_step)
        on_continuum = smallest_singular_value(jacobian) < settings.continuum_sv_tol
        if collector.offer(k, thetas, on_continuum):
            report.orbits.append(orbit)

    if not report.continuum and len(report.orbits) < 2:
        msg = f"Only {len(report.orbits)} distinct ({n},{m})-orbits found from {grid_size} seeds"
        report.warnings.append(msg)
        logger.warning(msg)
    logger.info(
        f"find_orbits ({n},{m}): {len(report.orbits)} orbits, continuum={report.continuum}, "
        f"{report.seeds_failed}/{report.seeds_tried} seeds failed"
    )
    return report


def orbits_through_tangency(
    curve: CurveModel,
    theta_fixed: float,
    n: int,
    m: int,
    grid_size: int = 64,
    seed: int | None = None,
) -> SearchReport:
    """θ_1 = θ_fixed を固定し、n 個の中点条件を最小二乗（Levenberg-Marquardt）で解く"""
    report = SearchReport(n=n, m=m)
    excluded = _check_period(n, m)
    if excluded:
        report.warnings.append(excluded)
        logger.warning(excluded)
        return report
    report.multiple_cover = math.gcd(n, m) > 1

    period = TWO_PI * m
    rng = np.random.default_rng(settings.seed if seed is None else seed)

    def full(free: FloatArray) -> FloatArray:
        return np.concatenate([[theta_fixed], free])

    def fun(free: FloatArray) -> FloatArray:
        try:
            r = _residual(curve, full(free))
        except ParallelTangentsError:
            return np.full(n, PENALTY)
        return r if np.all(np.isfinite(r)) else np.full(n, PENALTY)

    collector = OrbitCollector(report)
    for k in range(grid_size):
        report.seeds_tried += 1
        if k == 0:
            gaps = np.full(n, period / n)
        else:
            w = rng.uniform(0.5, 1.5, n)
            gaps = period * w / w.sum()
            if np.any(gaps >= math.pi):
                gaps = np.full(n, period / n)
        free0 = theta_fixed + np.cumsum(gaps)[:-1]

        sol = least_squares(
            fun, free0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200 * n
        )
        free = np.sort(theta_fixed + (sol.x - theta_fixed) % period)
        thetas = full(free)
        r = fun(free)
        norm = float(np.max(np.abs(r)))
        report.residual_history.append([float(np.max(np.abs(fun(free0)))), norm])
        if norm >= ACCEPT_RESIDUAL or not admissible_lift(thetas, m):
            report.seeds_failed += 1
            continue
        try:
            orbit = orbit_from_thetas(curve, thetas)
        except BilliardLabError as e:
            report.seeds_failed += 1
            logger.debug(f"Seed {k} rejected: {e.message}")
            continue
        if orbit.closure_residual >= ACCEPT_RESIDUAL or not winding_sum_check(orbit):
            report.seeds_failed += 1
            continue
        if collector.offer(k, thetas, on_continuum=False):
            report.orbits.append(orbit)

    logger.info(
        f"orbits_through_tangency ({n},{m}) at theta={theta_fixed:.6g}: "
        f"{len(report.orbits)} trajectories"
    )
    return report


def summarize(report: SearchReport | SymplecticSearchReport) -> SearchSummary:
    """CLI 向けサマリー"""
    return SearchSummary(
        n=report.n, m=report.m, orbits_found=len(report.orbits), continuum=report.continuum
    )
