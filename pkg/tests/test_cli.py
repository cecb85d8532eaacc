"""コマンドラインのテスト"""
import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from billiard_lab.certificates import identity_family, save_word
from billiard_lab.cli import Command, RunConfigError, Scene, build_run_config, render_svg
from billiard_lab.core import ValidationError
from billiard_lab.main import run

SVG = "{http://www.w3.org/2000/svg}"


def _svg_elements(path: Path, tag: str, css: str | None = None) -> list[ET.Element]:
    root = ET.parse(path).getroot()
    found = root.iter(f"{SVG}{tag}")
    return [el for el in found if css is None or el.get("class") == css]


class TestRunConfig:
    """build_run_config のテスト"""

    def test_valid(self, circle_file: Path) -> None:
        """正しい引数"""
        config = build_run_config(
            {"command": "outer-orbit", "curve": circle_file, "start": [2.0, 0.0], "steps": 3}
        )
        assert config.command is Command.OUTER_ORBIT
        assert config.steps == 3

    def test_missing_required(self) -> None:
        """必須引数の欠落"""
        with pytest.raises(RunConfigError) as exc_info:
            build_run_config({"command": "identity-family"})
        assert exc_info.value.error_code == "INVALID_RUN_CONFIG"
        assert isinstance(exc_info.value, ValidationError)

    def test_tolerance_too_small(self, circle_file: Path) -> None:
        """許容誤差の下限"""
        with pytest.raises(RunConfigError):
            build_run_config(
                {"command": "find-periodic", "curve": circle_file, "n": 3, "tolerance": 1e-20}
            )

    def test_certify_needs_input(self) -> None:
        """certify は語ファイルか曲線と周期が必要"""
        with pytest.raises(RunConfigError) as exc_info:
            build_run_config({"command": "certify"})
        assert "--word" in exc_info.value.message


class TestOuterOrbitCommand:
    """outer-orbit サブコマンドのテスト"""

    def test_closed_triangle(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """円の (3,1)-軌道の表"""
        code = run(["outer-orbit", "--curve", str(circle_file), "--start=2,0", "--steps", "3"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "index,x,y,theta_tangency,alpha,beta"
        assert len([line for line in lines if not line.startswith("#")]) == 5
        assert "# winding m=1" in lines

    def test_negative_start(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """負の座標は --start= で渡す"""
        code = run(["outer-orbit", "--curve", str(circle_file), "--start=-2,0", "--steps", "3"])
        assert code == 0
        assert "# winding m=1" in capsys.readouterr().out

    def test_open_trajectory(self, ellipse_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """閉じない軌道"""
        code = run(["outer-orbit", "--curve", str(ellipse_file), "--start=3,1", "--steps", "4"])
        assert code == 0
        assert "# winding open" in capsys.readouterr().out

    def test_inside_point(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """内部の初期点は計算エラー"""
        code = run(["outer-orbit", "--curve", str(circle_file), "--start=0.5,0"])
        assert code == 1
        assert capsys.readouterr().err.startswith("PointInsideBodyError: ")

    def test_wrong_coordinate_count(
        self, circle_file: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """座標の個数の誤り"""
        code = run(["outer-orbit", "--curve", str(circle_file), "--start=2,0,1"])
        assert code == 2
        assert "usage:" in capsys.readouterr().err


class TestUsageErrors:
    """引数の誤りのテスト"""

    def test_unknown_command(self, capsys: pytest.CaptureFixture[str]) -> None:
        """未知のサブコマンド"""
        assert run(["bounce"]) == 2
        assert "usage:" in capsys.readouterr().err

    def test_tolerance(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """小さすぎる許容誤差"""
        code = run(
            ["find-periodic", "--curve", str(circle_file), "--n", "3", "--tolerance", "1e-20"]
        )
        assert code == 2
        assert "RunConfigError" in capsys.readouterr().err

    def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """存在しない曲線ファイル"""
        code = run(["find-periodic", "--curve", str(tmp_path / "none.json"), "--n", "3"])
        assert code == 2
        assert "input file not found" in capsys.readouterr().err

    def test_bad_number(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """数値でない座標"""
        code = run(["outer-orbit", "--curve", str(circle_file), "--start=a,b"])
        assert code == 2


class TestSearchCommands:
    """探索系サブコマンドのテスト"""

    def test_find_periodic(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """find-periodic の JSON サマリー"""
        code = run(["find-periodic", "--curve", str(circle_file), "--n", "3", "--grid", "4"])
        assert code == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary == {"n": 3, "m": 1, "orbits_found": 1, "continuum": True}

    def test_find_periodic_csv(self, circle_file: Path, tmp_path: Path) -> None:
        """最初の軌道の CSV"""
        csv = tmp_path / "orbit.csv"
        code = run(
            [
                "find-periodic", "--curve", str(circle_file), "--n", "3", "--grid", "4",
                "--csv", str(csv), "--output", str(tmp_path / "summary.json"),
            ]
        )
        assert code == 0
        text = csv.read_text(encoding="utf-8")
        assert text.startswith("index,x,y,theta_tangency,alpha,beta\n")
        assert "# winding m=1" in text

    def test_symplectic_search(
        self, circle_file: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """シンプレクティック軌道の探索"""
        code = run(
            [
                "find-periodic", "--curve", str(circle_file), "--kind", "symplectic",
                "--n", "4", "--grid", "4",
            ]
        )
        assert code == 0
        assert json.loads(capsys.readouterr().out)["orbits_found"] == 1

    def test_through_tangency(
        self, ellipse_file: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """接点を固定した探索"""
        code = run(
            [
                "through-tangency", "--curve", str(ellipse_file), "--theta", "0.3",
                "--n", "3", "--grid", "8",
            ]
        )
        assert code == 0
        assert json.loads(capsys.readouterr().out)["orbits_found"] == 1

    def test_monodromy(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """monodromy の JSON"""
        code = run(["monodromy", "--curve", str(circle_file), "--n", "3", "--start=2,0"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 3
        assert data["trace"] == pytest.approx(2.0)
        assert data["determinant"] == pytest.approx(1.0)
        assert data["max_difference"] < 1e-5


class TestCertificateCommands:
    """証明書系サブコマンドのテスト"""

    def test_certify_word(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """語ファイルの証明書"""
        path = save_word(identity_family(8), tmp_path / "w8.json")
        assert run(["certify", "--word", str(path)]) == 0
        first = capsys.readouterr().out.splitlines()[0]
        assert first == "inconclusive (Σα = 6π > 2π); product = Id to 1e-10"

    def test_certify_orbit(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """軌道の語の証明書"""
        code = run(["certify", "--curve", str(circle_file), "--n", "3", "--start=2,0"])
        assert code == 0
        assert capsys.readouterr().out.startswith("proven_not_identity")

    def test_identity_family(self, capsys: pytest.CaptureFixture[str]) -> None:
        """identity-family の語"""
        assert run(["identity-family", "--n", "8"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["letters"]) == 8

    def test_identity_family_small_n(self, capsys: pytest.CaptureFixture[str]) -> None:
        """n=4 は計算エラー"""
        assert run(["identity-family", "--n", "4"]) == 1
        assert capsys.readouterr().err.startswith("InvalidPeriodError: Invalid period n=4")


class TestSymplecticOrbitCommand:
    """symplectic-orbit サブコマンドのテスト"""

    def test_planar(self, circle_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """平面曲線の弦の列"""
        code = run(
            ["symplectic-orbit", "--curve", str(circle_file), "--start=0,0.5", "--steps", "3"]
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "index,t,x,y"
        assert len(lines) == 6
        assert float(lines[3].split(",")[1]) == pytest.approx(1.0)

    def test_ellipsoid(self, sphere_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """R^4 の単位球"""
        code = run(
            [
                "symplectic-orbit", "--curve", str(sphere_file), "--start=1,0,0,0",
                "--next=0,0,1,0", "--steps", "2",
            ]
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "index,x1,x2,x3,x4"
        assert lines[3] == "2,-1,0,0,0"

    def test_ellipsoid_missing_second_point(
        self, sphere_file: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """楕円体では --next が必要"""
        code = run(["symplectic-orbit", "--curve", str(sphere_file), "--start=1,0,0,0"])
        assert code == 2


class TestPlotCommands:
    """SVG 出力のテスト"""

    def test_plot_orbit_csv(self, circle_file: Path, tmp_path: Path) -> None:
        """軌道CSVの描画"""
        csv = tmp_path / "tri.csv"
        code = run(
            [
                "outer-orbit", "--curve", str(circle_file), "--start=2,0", "--steps", "3",
                "--output", str(csv),
            ]
        )
        assert code == 0
        svg = tmp_path / "tri.svg"
        args = ["plot", "--curve", str(circle_file), "--orbit", str(csv), "--output", str(svg)]
        assert run(args) == 0
        polygons = _svg_elements(svg, "polygon", "orbit")
        assert len(polygons) == 1
        assert len(polygons[0].get("points", "").split()) == 3
        assert len(_svg_elements(svg, "path", "curve")) == 1

        again = tmp_path / "tri2.svg"
        args[-1] = str(again)
        assert run(args) == 0
        assert again.read_bytes() == svg.read_bytes()

    def test_octagon_plot(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """八角形・弧・8周期点の線分"""
        svg = tmp_path / "octagon.svg"
        assert run(["octagon", "--count", "10", "--plot", str(svg)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["audit"]["passed"]
        assert len(report["sweeps"]) == 2
        assert all(s["max_residual"] < 1e-10 for s in report["sweeps"])
        assert len(_svg_elements(svg, "polygon", "outline")) == 1
        assert len(_svg_elements(svg, "polyline", "arc")) == 8
        assert len(_svg_elements(svg, "line", "periodic-segment")) == 2

    def test_octagon_overlap_reported(self, capsys: pytest.CaptureFixture[str]) -> None:
        """幅の広い弧は監査で報告"""
        assert run(["octagon", "--halfwidth", "0.5", "--count", "4", "--line", "x1x2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert not report["audit"]["passed"]

    def test_empty_scene(self) -> None:
        """空のシーン"""
        root = ET.fromstring(render_svg(Scene()))
        assert root.get("viewBox") == "0 0 800 800"
        assert [child.tag for child in root] == [f"{SVG}rect"]
