"""平面シンプレクティックビリヤード写像と外部ビリヤードとの対応"""
import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy.optimize import brentq

from ..geometry.curve import CurveModel, unit_normal, unit_tangent
from ..geometry.support import FloatArray
from ..outer.billiard import orbit_from_points
from ..outer.exceptions import OrbitNotClosedError
from ..outer.schemas import OuterOrbit
from .exceptions import DegenerateChordError, NoAdmissibleImageError, NotClosedError
from .schemas import ChordState, FourPeriodicCandidate

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
CLOSURE_TOL = 1e-10
CORRESPONDENCE_TOL = 1e-9
DEGENERATE_CHORD_TOL = 1e-12


def symplectic_residual(curve: CurveModel, params: Sequence[float] | FloatArray) -> FloatArray:
    """成分 i = cross(γ(t_{i+1}) − γ(t_{i−1}), T(t_i))（添字は巡回）"""
    t = np.asarray(params, dtype=np.float64)
    points = curve.positions(t)
    tangents = unit_tangent(t)
    chord = np.roll(points, -1, axis=0) - np.roll(points, 1, axis=0)
    return chord[:, 0] * tangents[:, 1] - chord[:, 1] * tangents[:, 0]


def symplectic_map(curve: CurveModel, state: ChordState) -> ChordState:
    """(t_prev, t_cur) ↦ (t_cur, t_next)。γ(t_next) − γ(t_prev) は t_cur での接線に平行

    f(t) = (γ(t) − γ(t_prev))·N(t_cur) は (t_cur, t_cur + π) で狭義単調減少。

    Raises:
        NoAdmissibleImageError: 区間の端で符号が変わらない場合
    """
    t_cur = state.t_cur
    t_prev = t_cur - (t_cur - state.t_prev) % TWO_PI
    normal = unit_normal(t_cur)
    base = float(curve.positions(t_prev) @ normal)

    def f(t: float) -> float:
        return float(curve.positions(t) @ normal) - base

    lo, hi = t_cur, t_cur + math.pi
    f_lo, f_hi = f(lo), f(hi)
    if not (f_lo > 0.0 and f_hi < 0.0):
        raise NoAdmissibleImageError(
            f"No admissible image for chord state ({state.t_prev:.6g}, {state.t_cur:.6g})",
            error_code="NO_ADMISSIBLE_IMAGE",
            details={"t_prev": state.t_prev, "t_cur": state.t_cur, "f_lo": f_lo, "f_hi": f_hi},
        )
    t_next = float(brentq(f, lo, hi, xtol=1e-15, maxiter=200))
    return ChordState(t_prev=t_cur, t_cur=t_next)


def iterate_chords(curve: CurveModel, state: ChordState, steps: int) -> list[ChordState]:
    """state から steps 回写像した状態列（初期状態は含まない）"""
    states: list[ChordState] = []
    current = state
    for _ in range(steps):
        current = symplectic_map(curve, current)
        states.append(current)
    return states


def _lifted(params: Sequence[float]) -> list[float]:
    t1 = params[0]
    return [t1] + [t1 + (t - t1) % TWO_PI for t in params[1:]]


def three_periodic_to_outer(curve: CurveModel, params: Sequence[float]) -> OuterOrbit:
    """シンプレクティック3周期軌道の接線がつくる三角形（外部ビリヤード3周期軌道）

    頂点 x_i は t_{i−1} と t_i での接線の交点で、γ(t_i) は辺 x_i x_{i+1} の中点。

    Raises:
        NotClosedError: params が閉じた3周期軌道でない場合
        ParallelTangentsError: 接線が平行な場合
    """
    if len(params) != 3:
        raise NotClosedError(
            f"Expected 3 parameters, got {len(params)}",
            error_code="NOT_THREE_PERIODIC",
            details={"params": list(params)},
        )
    lifted = _lifted(params)
    if not lifted[1] < lifted[2]:
        lifted = _lifted([params[0], params[2], params[1]])
    residual = float(np.max(np.abs(symplectic_residual(curve, lifted))))
    if residual >= CLOSURE_TOL:
        raise NotClosedError(
            f"Parameters are not a closed symplectic 3-orbit (residual {residual:.3e})",
            error_code="NOT_CLOSED",
            details={"params": lifted, "residual": residual},
        )

    vertices = np.array(
        [curve.tangent_intersection(lifted[i - 1], lifted[i]) for i in range(3)]
    )
    mids = 0.5 * (vertices + np.roll(vertices, -1, axis=0))
    defect = float(np.max(np.linalg.norm(mids - curve.positions(lifted), axis=1)))
    if defect > CORRESPONDENCE_TOL:
        raise NotClosedError(
            f"Tangency points are not midpoints of the outer triangle (defect {defect:.3e})",
            error_code="MIDPOINT_DEFECT",
            details={"defect": defect},
        )
    try:
        orbit = orbit_from_points(curve, vertices)
    except OrbitNotClosedError as e:
        raise NotClosedError(
            f"Outer triangle does not close: {e.message}",
            error_code="OUTER_NOT_CLOSED",
            details=e.details,
        ) from e
    if orbit.closure_residual > CORRESPONDENCE_TOL:
        raise NotClosedError(
            f"Outer triangle closure {orbit.closure_residual:.3e} exceeds {CORRESPONDENCE_TOL:.0e}",
            error_code="OUTER_NOT_CLOSED",
            details={"closure_residual": orbit.closure_residual},
        )
    return orbit


def outer_to_three_periodic(curve: CurveModel, orbit: OuterOrbit) -> list[float]:
    """外部ビリヤード3周期軌道の辺の中点（接点）をシンプレクティック3周期軌道として返す

    Raises:
        NotClosedError: 3周期でない、または中点が曲線上にない場合
    """
    if orbit.n != 3:
        raise NotClosedError(
            f"Expected a 3-periodic outer orbit, got n={orbit.n}",
            error_code="NOT_THREE_PERIODIC",
            details={"n": orbit.n},
        )
    vertices = np.asarray(orbit.vertices)
    mids = 0.5 * (vertices + np.roll(vertices, -1, axis=0))
    params = _lifted(orbit.tangencies)
    defect = float(np.max(np.linalg.norm(mids - curve.positions(params), axis=1)))
    if defect > CORRESPONDENCE_TOL:
        raise NotClosedError(
            f"Side midpoints do not lie on the curve (defect {defect:.3e})",
            error_code="MIDPOINT_DEFECT",
            details={"defect": defect},
        )
    return params


def four_periodic_through(curve: CurveModel, t_a: float) -> FourPeriodicCandidate:
    """A = γ(t_A) を通る4周期軌道の唯一の候補

    C は接線が逆向きの点（t_C = t_A + π）、B と D は接線が AC に平行な2点。

    Raises:
        DegenerateChordError: γ(t_C) = γ(t_A) の場合
    """
    t_c = t_a + math.pi
    chord = curve.positions(t_c) - curve.positions(t_a)
    if float(np.linalg.norm(chord)) < DEGENERATE_CHORD_TOL:
        raise DegenerateChordError(
            f"Chord AC degenerates at t_A={t_a:.6g}",
            error_code="DEGENERATE_CHORD",
            details={"t_a": t_a},
        )
    psi = math.atan2(float(chord[1]), float(chord[0]))
    # T(t) ∥ AC ⇔ t ≡ ψ − π/2 (mod π)
    t_b = t_a + (psi - 0.5 * math.pi - t_a) % math.pi
    t_d = t_b + math.pi
    residual = float(np.max(np.abs(symplectic_residual(curve, [t_a, t_b, t_c, t_d]))))
    logger.debug(f"Four-periodic candidate through t_A={t_a:.6g}: residual {residual:.3e}")
    return FourPeriodicCandidate(
        t_a=t_a,
        t_b=t_b,
        t_c=t_c,
        t_d=t_d,
        closure_residual=residual,
        closes=residual < CLOSURE_TOL,
    )
