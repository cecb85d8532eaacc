"""周期軌道探索モジュールのテスト"""
import math

import numpy as np
import pytest

from billiard_lab.core import InvalidPeriodError, NoConvergenceError
from billiard_lab.geometry import CurveModel, EllipseSpec, ParallelTangentsError
from billiard_lab.search import (
    TangencyVector,
    circumscribed_vertices,
    cyclic_distance,
    damped_newton,
    find_orbits,
    midpoint_residual,
    newton_solve,
    orbits_through_tangency,
    summarize,
    symplectic_find_orbits,
    symplectic_residual,
    track_homotopy,
)

TWO_PI = 2.0 * math.pi


def _regular(n: int, m: int, phase: float = 0.0) -> TangencyVector:
    return TangencyVector(
        thetas=[phase + TWO_PI * m * i / n for i in range(n)], winding=m
    )


def _gaps(thetas: list[float], m: int) -> np.ndarray:
    return np.diff(np.append(thetas, thetas[0] + TWO_PI * m))


class TestTangencyVector:
    """TangencyVector のテスト"""

    def test_not_increasing(self) -> None:
        """単調増加でない持ち上げのテスト"""
        with pytest.raises(ValueError):
            TangencyVector(thetas=[0.0, 2.0, 1.0], winding=1)

    def test_inconsistent_winding(self) -> None:
        """回転数と矛盾する持ち上げのテスト"""
        with pytest.raises(ValueError):
            TangencyVector(thetas=[0.0, 3.0, 6.5], winding=1)

    def test_too_short(self) -> None:
        """成分が3未満のテスト"""
        with pytest.raises(ValueError):
            TangencyVector(thetas=[0.0, 2.0], winding=1)


class TestCircumscribedVertices:
    """circumscribed_vertices のテスト"""

    def test_circle_triangle(self, circle: CurveModel) -> None:
        """円の正三角形の頂点は原点から距離2"""
        vertices = circumscribed_vertices(circle, _regular(3, 1))
        assert np.allclose(np.linalg.norm(vertices, axis=1), 2.0)

    def test_circle_square(self, circle: CurveModel) -> None:
        """円の外接正方形の頂点"""
        vertices = circumscribed_vertices(circle, _regular(4, 1))
        expected = {(1, -1), (1, 1), (-1, 1), (-1, -1)}
        assert {(round(p[0]), round(p[1])) for p in vertices} == expected
        assert np.allclose(np.abs(vertices), 1.0)

    def test_parallel_tangents(self, circle: CurveModel) -> None:
        """平行な隣接接線のテスト"""
        with pytest.raises(ParallelTangentsError) as exc_info:
            circumscribed_vertices(
                circle, TangencyVector(thetas=[0.0, math.pi, 1.5 * math.pi], winding=1)
            )
        assert exc_info.value.error_code == "PARALLEL_TANGENTS"


class TestMidpointResidual:
    """midpoint_residual のテスト"""

    def test_regular_pentagram(self, circle: CurveModel) -> None:
        """円の (5,2)-正星形で残差が0"""
        residual = midpoint_residual(circle, _regular(5, 2))
        assert residual.shape == (5,)
        assert np.max(np.abs(residual)) < 1e-12

    def test_perturbed(self, circle: CurveModel) -> None:
        """摂動した接点角で残差が非零"""
        thetas = list(_regular(5, 2).thetas)
        thetas[2] += 1e-3
        residual = midpoint_residual(circle, TangencyVector(thetas=thetas, winding=2))
        assert 1e-5 < np.max(np.abs(residual)) < 1e-1


class TestNewton:
    """Newton 法のテスト"""

    def test_damped_newton_square_root(self) -> None:
        """1変数の根のテスト"""
        result = damped_newton(
            lambda x: x**2 - 2.0, np.array([1.0]), lambda x: True
        )
        assert result.x[0] == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert result.history[-1] < 1e-12
        assert not result.singular

    def test_damped_newton_no_root(self) -> None:
        """根のない関数のテスト"""
        with pytest.raises(NoConvergenceError):
            damped_newton(lambda x: x**2 + 1.0, np.array([1.0]), lambda x: True)

    def test_circle_pentagram(self, circle: CurveModel) -> None:
        """摂動した初期値から円の (5,2)-軌道へ収束"""
        thetas = np.array(_regular(5, 2).thetas) + np.array([0.05, -0.03, 0.02, 0.0, -0.04])
        orbit = newton_solve(circle, TangencyVector(thetas=thetas.tolist(), winding=2))
        assert orbit.n == 5
        assert orbit.winding == 2
        assert orbit.closure_residual < 1e-10
        assert np.allclose(_gaps(orbit.tangencies, 2) % TWO_PI, 4.0 * math.pi / 5, atol=1e-9)

    def test_parallel_seed(self, circle: CurveModel) -> None:
        """平行な接線を含む初期値は反復前に失敗"""
        with pytest.raises(ParallelTangentsError):
            newton_solve(
                circle, TangencyVector(thetas=[0.0, math.pi, 1.5 * math.pi], winding=1)
            )

    def test_homotopy_to_ellipse(self) -> None:
        """円から楕円へ a を 0.01 ずつ追跡し、各段が解で θ の跳びが 0.01 以下"""
        curves = [CurveModel(EllipseSpec(a=a, b=1.0)) for a in np.linspace(1.0, 2.0, 101)]
        start = _regular(3, 1)
        path = track_homotopy(curves, start)
        assert len(path) == 101
        for curve, tv in zip(curves, path, strict=True):
            assert np.max(np.abs(midpoint_residual(curve, tv))) < 1e-12
        thetas = np.array([start.thetas] + [tv.thetas for tv in path])
        assert np.max(np.abs(np.diff(thetas, axis=0))) <= 1e-2


class TestFindOrbits:
    """find_orbits のテスト"""

    def test_circle_continuum(self, circle: CurveModel) -> None:
        """円の (3,1)-軌道は連続族で1つだけ報告"""
        report = find_orbits(circle, 3, 1, grid_size=8, seed=0)
        assert report.continuum
        assert len(report.orbits) == 1
        assert report.orbits[0].closure_residual < 1e-10
        assert any("family" in line for line in report.dedup_log)

    def test_ellipse_continuum(self, ellipse: CurveModel) -> None:
        """楕円の (3,1)-軌道も連続族"""
        report = find_orbits(ellipse, 3, 1, grid_size=8, seed=0)
        assert report.continuum
        assert len(report.orbits) == 1

    def test_fourier_isolated_orbits(self, fourier_curve: CurveModel) -> None:
        """一般の曲線では孤立した軌道が2つ以上"""
        report = find_orbits(fourier_curve, 3, 1, grid_size=32, seed=0)
        assert not report.continuum
        assert len(report.orbits) >= 2
        for orbit in report.orbits:
            assert orbit.closure_residual < 1e-10
        for i, a in enumerate(report.orbits):
            for b in report.orbits[i + 1 :]:
                assert cyclic_distance(a.tangencies, b.tangencies) > 1e-6

    def test_degenerate_cover_excluded(self, circle: CurveModel) -> None:
        """(4,2) は除外"""
        report = find_orbits(circle, 4, 2, grid_size=4)
        assert report.orbits == []
        assert report.multiple_cover
        assert report.seeds_tried == 0
        assert report.warnings

    def test_rotation_out_of_range(self, circle: CurveModel) -> None:
        """2m > n は除外"""
        report = find_orbits(circle, 5, 3, grid_size=4)
        assert report.orbits == []
        assert not report.multiple_cover
        assert "0 < 2m < n" in report.warnings[0]

    def test_multiple_cover_flagged(self, circle: CurveModel) -> None:
        """gcd(n, m) > 1 は警告付きで探索"""
        report = find_orbits(circle, 6, 2, grid_size=2, seed=0)
        assert report.multiple_cover
        assert report.seeds_tried == 2
        assert any("gcd" in w for w in report.warnings)

    def test_reproducible(self, fourier_curve: CurveModel) -> None:
        """同じシードで同じ結果"""
        first = find_orbits(fourier_curve, 3, 1, grid_size=6, seed=3)
        second = find_orbits(fourier_curve, 3, 1, grid_size=6, seed=3)
        assert first.residual_history == second.residual_history
        assert len(first.orbits) == len(second.orbits)

    def test_summarize(self, circle: CurveModel) -> None:
        """サマリーのテスト"""
        summary = summarize(find_orbits(circle, 3, 1, grid_size=4, seed=0))
        assert summary.model_dump() == {"n": 3, "m": 1, "orbits_found": 1, "continuum": True}


class TestOrbitsThroughTangency:
    """orbits_through_tangency のテスト"""

    @pytest.mark.parametrize("n", [3, 4])
    @pytest.mark.parametrize("theta", [0.3 + 0.75 * k for k in range(8)])
    def test_ellipse_single_orbit(self, ellipse: CurveModel, theta: float, n: int) -> None:
        """楕円の接点を1つ固定すると軌道は1本で、格子を細かくしても変わらない"""
        coarse = orbits_through_tangency(ellipse, theta, n, 1, grid_size=64, seed=0)
        fine = orbits_through_tangency(ellipse, theta, n, 1, grid_size=256, seed=0)
        assert len(coarse.orbits) == len(fine.orbits) == 1
        assert cyclic_distance(coarse.orbits[0].tangencies, fine.orbits[0].tangencies) < 1e-6
        orbit = coarse.orbits[0]
        assert orbit.tangencies[0] % TWO_PI == pytest.approx(theta % TWO_PI, abs=1e-9)
        assert orbit.closure_residual < 1e-10

    def test_circle_triangle(self, circle: CurveModel) -> None:
        """円では θ_1 = 0 を通る正三角形"""
        report = orbits_through_tangency(circle, 0.0, 3, 1, grid_size=8, seed=0)
        assert len(report.orbits) == 1
        gaps = _gaps(report.orbits[0].tangencies, 1) % TWO_PI
        assert np.allclose(gaps, TWO_PI / 3, atol=1e-9)

    def test_excluded_period(self, circle: CurveModel) -> None:
        """除外される周期のテスト"""
        report = orbits_through_tangency(circle, 0.0, 4, 2, grid_size=4)
        assert report.orbits == []
        assert report.warnings


class TestSymplecticSearch:
    """symplectic_find_orbits のテスト"""

    @pytest.mark.parametrize("n", [3, 4])
    def test_circle(self, circle: CurveModel, n: int) -> None:
        """円のシンプレクティック軌道は等間隔"""
        report = symplectic_find_orbits(circle, n, grid_size=6, seed=0)
        assert report.continuum
        assert len(report.orbits) == 1
        orbit = report.orbits[0]
        assert np.allclose(_gaps(orbit.params, 1), TWO_PI / n, atol=1e-9)
        assert orbit.residual < 1e-10

    def test_ellipse(self, ellipse: CurveModel) -> None:
        """楕円の3周期軌道の残差"""
        report = symplectic_find_orbits(ellipse, 3, grid_size=6, seed=0)
        assert report.orbits
        for orbit in report.orbits:
            assert np.max(np.abs(symplectic_residual(ellipse, orbit.params))) < 1e-10
            assert len(orbit.points) == 3

    def test_invalid_period(self, circle: CurveModel) -> None:
        """n < 3 のテスト"""
        with pytest.raises(InvalidPeriodError) as exc_info:
            symplectic_find_orbits(circle, 2)
        assert exc_info.value.error_code == "INVALID_PERIOD"

    def test_invalid_rotation(self, circle: CurveModel) -> None:
        """2m >= n のテスト"""
        with pytest.raises(InvalidPeriodError):
            symplectic_find_orbits(circle, 4, m=2)


class TestCyclicDistance:
    """cyclic_distance のテスト"""

    def test_shift(self) -> None:
        """巡回シフトは距離0"""
        assert cyclic_distance([0.0, 1.0, 2.0], [1.0, 2.0, 0.0]) == pytest.approx(0.0)

    def test_modulo(self) -> None:
        """2π の差は距離0"""
        assert cyclic_distance([0.0, 1.0, 2.0], [TWO_PI, 1.0, 2.0]) == pytest.approx(
            0.0, abs=1e-15
        )

    def test_distinct(self) -> None:
        """異なる列の距離"""
        assert cyclic_distance([0.0, 1.0, 2.0], [0.0, 1.0, 2.5]) == pytest.approx(0.5)

    def test_length_mismatch(self) -> None:
        """長さが違う場合は無限大"""
        assert cyclic_distance([0.0, 1.0], [0.0, 1.0, 2.0]) == math.inf
