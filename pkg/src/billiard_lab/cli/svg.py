"""決定的な SVG 出力

座標は世界座標のまま 17 桁で書き出し、y 軸の反転は transform で行う。
同じシーンからは常にバイト単位で同一のファイルが得られる。
"""
import logging
import xml.etree.ElementTree as ET
from collections.abc import Iterable
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from ..core.files import write_text
from ..geometry.schemas import Vec2

logger = logging.getLogger(__name__)

CANVAS_SIZE = 800
MARGIN = 0.05
MARKER_RADIUS = 0.006
SVG_NS = "http://www.w3.org/2000/svg"

_STYLE = (
    ".curve{fill:none;stroke:#1f4e79;stroke-width:1.5}"
    ".outline{fill:none;stroke:#888888;stroke-width:1}"
    ".orbit{fill:none;stroke:#c0392b;stroke-width:1}"
    ".arc{fill:none;stroke:#1f4e79;stroke-width:2}"
    ".periodic-segment{stroke:#27ae60;stroke-width:3}"
    ".tangency{fill:#000000}"
)


class Scene(BaseModel):
    """描画する要素の集合"""

    model_config = ConfigDict(extra="forbid")

    curve: list[Vec2] = Field(default_factory=list, description="閉曲線のサンプル点")
    outlines: list[list[Vec2]] = Field(default_factory=list, description="補助の閉多角形")
    orbits: list[list[Vec2]] = Field(default_factory=list, description="閉軌道の頂点列")
    arcs: list[list[Vec2]] = Field(default_factory=list, description="開いた曲線片")
    segments: list[tuple[Vec2, Vec2]] = Field(default_factory=list, description="強調線分")
    markers: list[Vec2] = Field(default_factory=list, description="接点などの印")
    title: str | None = None

    def coordinates(self) -> list[Vec2]:
        points: list[Vec2] = list(self.curve) + list(self.markers)
        for group in (self.outlines, self.orbits, self.arcs):
            for poly in group:
                points.extend(poly)
        for a, b in self.segments:
            points.extend((a, b))
        return points


def _num(value: float) -> str:
    return f"{value:.17g}"


def _points_attr(points: Iterable[Vec2]) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in points)


def _bounds(points: list[Vec2]) -> tuple[float, float, float, float]:
    """(x_min, y_min, 幅, 高さ) に余白を加えた正方形の範囲"""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = MARGIN * span
    cx = 0.5 * (max(xs) + min(xs))
    cy = 0.5 * (max(ys) + min(ys))
    half = 0.5 * span + pad
    return cx - half, cy - half, 2.0 * half, 2.0 * half


def render_svg(scene: Scene) -> str:
    """シーンを SVG テキストに変換"""
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": str(CANVAS_SIZE),
            "height": str(CANVAS_SIZE),
        },
    )
    points = scene.coordinates()
    if not points:
        root.set("viewBox", f"0 0 {CANVAS_SIZE} {CANVAS_SIZE}")
        background = {"class": "background", "width": "100%", "height": "100%", "fill": "#ffffff"}
        ET.SubElement(root, "rect", background)
        return ET.tostring(root, encoding="unicode") + "\n"

    x0, y0, w, h = _bounds(points)
    # y 反転後の viewBox
    root.set("viewBox", f"{_num(x0)} {_num(-(y0 + h))} {_num(w)} {_num(h)}")
    ET.SubElement(root, "style").text = _STYLE
    if scene.title:
        ET.SubElement(root, "title").text = scene.title
    ET.SubElement(
        root,
        "rect",
        {
            "class": "background",
            "x": _num(x0),
            "y": _num(-(y0 + h)),
            "width": _num(w),
            "height": _num(h),
            "fill": "#ffffff",
        },
    )
    group = ET.SubElement(root, "g", {"transform": "scale(1,-1)"})
    stroke_attrs = {"vector-effect": "non-scaling-stroke"}

    if scene.curve:
        head, *tail = scene.curve
        d = f"M {_num(head[0])} {_num(head[1])} " + " ".join(
            f"L {_num(x)} {_num(y)}" for x, y in tail
        ) + " Z"
        ET.SubElement(group, "path", {"class": "curve", "d": d, **stroke_attrs})
    for tag, css, polys in (
        ("polygon", "outline", scene.outlines),
        ("polygon", "orbit", scene.orbits),
        ("polyline", "arc", scene.arcs),
    ):
        for poly in polys:
            ET.SubElement(group, tag, {"class": css, "points": _points_attr(poly), **stroke_attrs})
    for a, b in scene.segments:
        ET.SubElement(
            group,
            "line",
            {
                "class": "periodic-segment",
                "x1": _num(a[0]),
                "y1": _num(a[1]),
                "x2": _num(b[0]),
                "y2": _num(b[1]),
                **stroke_attrs,
            },
        )
    radius = _num(MARKER_RADIUS * w)
    for x, y in scene.markers:
        marker = {"class": "tangency", "cx": _num(x), "cy": _num(y), "r": radius}
        ET.SubElement(group, "circle", marker)
    return ET.tostring(root, encoding="unicode") + "\n"


def emit_svg(scene: Scene, path: str | Path) -> Path:
    """シーンを SVG ファイルに書き出す

    Raises:
        OutputError: 書き込みに失敗した場合
    """
    file_path = write_text(path, render_svg(scene), "SVG_WRITE_FAILED")
    logger.info(f"SVG written to {file_path}")
    return file_path
