"""曲線幾何モジュールのテスト"""
import json
import math
from pathlib import Path

import numpy as np
import pytest

from billiard_lab.geometry import (
    CircleSpec,
    CurveModel,
    CurveSpecError,
    EllipseSpec,
    ParallelTangentsError,
    PointInsideBodyError,
    SupportFourierSpec,
    load_curve,
    parse_curve_spec,
)


class TestCurveSpec:
    """曲線指定のテスト"""

    def test_parse_circle(self) -> None:
        """円の指定の読み込みテスト"""
        spec = parse_curve_spec('{"type": "circle", "radius": 1.5}')
        assert isinstance(spec, CircleSpec)
        assert spec.radius == 1.5
        assert spec.center == (0.0, 0.0)

    def test_parse_fourier(self) -> None:
        """フーリエ曲線の指定の読み込みテスト"""
        text = '{"type":"support_fourier","a0":1.0,"terms":[[2,0.05,0.0],[3,0.0,0.02]]}'
        spec = parse_curve_spec(text)
        assert isinstance(spec, SupportFourierSpec)
        assert spec.terms == [(2, 0.05, 0.0), (3, 0.0, 0.02)]

    def test_unknown_type(self) -> None:
        """未知の種類のテスト"""
        with pytest.raises(CurveSpecError) as exc_info:
            parse_curve_spec('{"type": "square", "side": 1.0}')
        assert exc_info.value.error_code == "INVALID_CURVE_SPEC"

    def test_extra_field_rejected(self) -> None:
        """余分なフィールドのテスト"""
        with pytest.raises(CurveSpecError):
            parse_curve_spec('{"type": "circle", "radius": 1.0, "color": "red"}')

    def test_ellipse_axes_order(self) -> None:
        """楕円の半径の順序のテスト"""
        with pytest.raises(ValueError):
            EllipseSpec(a=1.0, b=2.0)

    def test_fourier_order_one_rejected(self) -> None:
        """1次のフーリエ項（平行移動）のテスト"""
        with pytest.raises(ValueError):
            SupportFourierSpec(a0=1.0, terms=[(1, 0.1, 0.0)])

    def test_not_strongly_convex(self) -> None:
        """強凸でない曲線の拒否テスト"""
        spec = SupportFourierSpec(a0=1.0, terms=[(3, 0.2, 0.0)])
        with pytest.raises(CurveSpecError) as exc_info:
            CurveModel(spec)
        assert exc_info.value.error_code == "NOT_STRONGLY_CONVEX"
        assert exc_info.value.details["min_rho"] <= 0.0
        assert "theta" in exc_info.value.details

    def test_load_curve(self, ellipse_file: Path) -> None:
        """ファイルからの読み込みテスト"""
        curve = load_curve(ellipse_file)
        assert curve.kind.value == "ellipse"

    def test_load_missing_file(self, tmp_path: Path) -> None:
        """存在しないファイルのテスト"""
        with pytest.raises(CurveSpecError) as exc_info:
            load_curve(tmp_path / "missing.json")
        assert exc_info.value.error_code == "CURVE_SPEC_UNREADABLE"

    def test_load_non_convex_file(self, tmp_path: Path) -> None:
        """強凸でない指定ファイルのテスト"""
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps({"type": "support_fourier", "a0": 1.0, "terms": [[4, 0.1, 0.0]]}),
            encoding="utf-8",
        )
        with pytest.raises(CurveSpecError) as exc_info:
            load_curve(path)
        assert "min rho" in exc_info.value.message


class TestEvaluate:
    """evaluate のテスト"""

    def test_circle_top(self, circle: CurveModel) -> None:
        """円の θ=π/2 のテスト"""
        z = circle.evaluate(math.pi / 2)
        assert z.position == pytest.approx((0.0, 1.0), abs=1e-15)
        assert z.tangent == pytest.approx((-1.0, 0.0), abs=1e-15)
        assert z.normal == pytest.approx((0.0, 1.0), abs=1e-15)
        assert z.rho == pytest.approx(1.0)

    def test_ellipse_major_axis(self, ellipse: CurveModel) -> None:
        """楕円の長軸端のテスト"""
        z = ellipse.evaluate(0.0)
        assert z.position == pytest.approx((2.0, 0.0), abs=1e-15)
        assert z.rho == pytest.approx(0.5)

    def test_fourier_without_terms(self) -> None:
        """高次項のないフーリエ曲線は単位円"""
        curve = CurveModel(SupportFourierSpec(a0=1.0))
        z = curve.evaluate(math.pi)
        assert z.position == pytest.approx((-1.0, 0.0), abs=1e-15)
        assert z.rho == pytest.approx(1.0)

    def test_shifted_center(self) -> None:
        """中心の平行移動のテスト"""
        curve = CurveModel(CircleSpec(radius=2.0, center=(1.0, -1.0)))
        z = curve.evaluate(0.0)
        assert z.position == pytest.approx((3.0, -1.0))

    def test_rho_matches_finite_difference(self, fourier_curve: CurveModel) -> None:
        """曲率半径と |dγ/dθ| の一致テスト"""
        h = 1e-6
        for theta in np.linspace(0.0, 2.0 * math.pi, 17):
            speed = np.linalg.norm(
                fourier_curve.positions(theta + h) - fourier_curve.positions(theta - h)
            ) / (2.0 * h)
            assert fourier_curve.evaluate(float(theta)).rho == pytest.approx(speed, rel=1e-7)

    def test_sample_count(self, ellipse: CurveModel) -> None:
        """境界サンプル数のテスト"""
        points = ellipse.sample(64)
        assert points.shape == (64, 2)
        assert np.allclose((points[:, 0] / 2.0) ** 2 + points[:, 1] ** 2, 1.0)


class TestTangency:
    """接点計算のテスト"""

    def test_forward_circle(self, circle: CurveModel) -> None:
        """円の前向き接点のテスト"""
        z = circle.forward_tangency((2.0, 0.0))
        assert z.theta == pytest.approx(math.pi / 3)
        assert z.position == pytest.approx((0.5, math.sqrt(3) / 2))

    def test_forward_rotational_equivariance(self, circle: CurveModel) -> None:
        """回転同変性のテスト"""
        z = circle.forward_tangency((0.0, 2.0))
        assert z.theta == pytest.approx(math.pi / 3 + math.pi / 2)

    def test_backward_circle(self, circle: CurveModel) -> None:
        """円の後ろ向き接点のテスト"""
        z = circle.backward_tangency((2.0, 0.0))
        assert z.position == pytest.approx((0.5, -math.sqrt(3) / 2))
        assert math.cos(z.theta) == pytest.approx(0.5)
        assert math.sin(z.theta) == pytest.approx(-math.sqrt(3) / 2)

    def test_backward_opposite_point(self, circle: CurveModel) -> None:
        """x=(−2,0) の前向き・後ろ向き接点のテスト"""
        forward = circle.forward_tangency((-2.0, 0.0))
        backward = circle.backward_tangency((-2.0, 0.0))
        assert forward.position == pytest.approx((-0.5, -math.sqrt(3) / 2))
        assert backward.position == pytest.approx((-0.5, math.sqrt(3) / 2))

    def test_ellipse_residual(self, ellipse: CurveModel) -> None:
        """楕円の接点残差のテスト"""
        x = np.array([4.0, 0.0])
        z = ellipse.forward_tangency(x)
        gap = float((x - np.asarray(z.position)) @ np.asarray(z.normal))
        assert abs(gap) < 1e-12 * (1.0 + 4.0)
        assert float((x - np.asarray(z.position)) @ np.asarray(z.tangent)) < 0.0

    def test_ellipse_against_dense_scan(self, ellipse: CurveModel) -> None:
        """稠密格子の符号変化との照合テスト"""
        x = np.array([4.0, 0.0])
        grid = np.linspace(0.0, 2.0 * math.pi, 1_000_001)
        normals = np.column_stack([np.cos(grid), np.sin(grid)])
        gap = np.sum((x - ellipse.positions(grid)) * normals, axis=1)
        roots = grid[:-1][np.sign(gap[:-1]) != np.sign(gap[1:])]
        theta = ellipse.forward_tangency(x).theta
        assert np.min(np.abs(roots - theta)) < 1e-5

    def test_forward_then_backward(self, fourier_curve: CurveModel) -> None:
        """前向き接点と像からの後ろ向き接点が一致するテスト"""
        x = np.array([1.7, 2.1])
        z = fourier_curve.forward_tangency(x)
        y = 2.0 * np.asarray(z.position) - x
        back = fourier_curve.backward_tangency(y)
        assert back.position == pytest.approx(z.position, abs=1e-10)

    def test_inside_point(self, circle: CurveModel) -> None:
        """内部の点のテスト"""
        with pytest.raises(PointInsideBodyError) as exc_info:
            circle.forward_tangency((0.5, 0.0))
        assert exc_info.value.error_code == "POINT_INSIDE_BODY"

    def test_boundary_point(self, circle: CurveModel) -> None:
        """境界上の点のテスト"""
        with pytest.raises(PointInsideBodyError) as exc_info:
            circle.forward_tangency((1.0, 0.0))
        assert exc_info.value.error_code == "POINT_ON_BOUNDARY"

    def test_contains(self, ellipse: CurveModel) -> None:
        """内外判定のテスト"""
        assert ellipse.contains((1.0, 0.5))
        assert not ellipse.contains((2.5, 0.0))
        assert ellipse.support_excess((3.0, 0.0)) == pytest.approx(1.0)


class TestTangentIntersection:
    """接線の交点のテスト"""

    def test_square_corner(self, circle: CurveModel) -> None:
        """θ=0 と θ=π/2 の接線の交点"""
        assert np.allclose(circle.tangent_intersection(0.0, math.pi / 2), [1.0, 1.0])

    def test_parallel(self, circle: CurveModel) -> None:
        """平行な接線のテスト"""
        with pytest.raises(ParallelTangentsError) as exc_info:
            circle.tangent_intersection(0.0, math.pi)
        assert exc_info.value.error_code == "PARALLEL_TANGENTS"
