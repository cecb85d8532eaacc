"""サブコマンドの実装（各モジュールの操作への対応付け）"""
import json
import logging
import math
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..certificates import (
    certify_not_identity,
    dump_word,
    identity_family,
    load_word,
    orbit_word,
    render_report,
)
from ..core.config import settings
from ..core.exceptions import NoConvergenceError
from ..geometry import CurveModel, CurveSpecError, load_curve, parse_curve_spec, to_vec2
from ..octagon import (
    CycleLine,
    OctagonReport,
    build_table,
    consistency_audit,
    eight_cycle,
    sweep,
)
from ..outer import (
    OuterOrbit,
    build_orbit,
    compare_monodromy,
    format_table,
    orbit_table,
    read_orbit_csv,
    table_points,
    trajectory_table,
    write_orbit_csv,
)
from ..search import (
    SearchReport,
    find_orbits,
    orbits_through_tangency,
    summarize,
    symplectic_find_orbits,
)
from ..symplectic import (
    ChordState,
    Ellipsoid2n,
    format_chord_csv,
    format_points_csv,
    iterate_2n,
    iterate_chords,
    parse_ellipsoid,
    write_symplectic_csv,
)
from .exceptions import RunConfigError
from .scenes import curve_points, ellipse_points, octagon_scene, orbit_scene, trajectory_scene
from .schemas import Command, RunConfig, SearchKind
from .svg import Scene, render_svg

logger = logging.getLogger(__name__)

OCTAGON_MIN_OFFSET = 1e-4
OCTAGON_MAX_OFFSET = 5e-2


class CommandResult(BaseModel):
    """サブコマンドの結果: 出力テキストと任意の描画シーン"""

    model_config = ConfigDict(extra="forbid")

    text: str
    scene: Scene | None = None


@contextmanager
def tolerance_override(config: RunConfig) -> Iterator[None]:
    """--tolerance を実行中だけ周期性判定に反映"""
    if config.tolerance is None:
        yield
        return
    previous = settings.periodicity_tol
    settings.periodicity_tol = config.tolerance
    try:
        yield
    finally:
        settings.periodicity_tol = previous


def _require(path: Path | None) -> Path:
    assert path is not None
    return path


def _point(values: list[float] | None, size: int, flag: str) -> list[float]:
    if values is None or len(values) != size:
        got = 0 if values is None else len(values)
        raise RunConfigError(
            f"{flag} expects {size} comma-separated numbers, got {got}",
            error_code="BAD_COORDINATES",
            details={"flag": flag, "values": values},
        )
    return values


def _load_table_or_body(path: Path) -> CurveModel | Ellipsoid2n:
    """"type" が ellipsoid なら楕円体、それ以外は平面曲線として読む"""
    try:
        text = path.read_text(encoding="utf-8")
        kind = json.loads(text).get("type")
    except (OSError, json.JSONDecodeError, AttributeError) as e:
        raise CurveSpecError(
            f"Cannot read spec {path}: {e}",
            error_code="CURVE_SPEC_UNREADABLE",
            details={"path": str(path)},
        ) from e
    if kind == "ellipsoid":
        return parse_ellipsoid(text)
    return CurveModel(parse_curve_spec(text))


def _first_orbit(curve: CurveModel, config: RunConfig) -> OuterOrbit:
    """--start があれば x_1 から構築、なければ探索で最初に見つかった軌道"""
    n = config.n or 0
    if config.start is not None:
        return build_orbit(curve, _point(config.start, 2, "--start"), n)
    report = find_orbits(curve, n, config.m, seed=config.seed)
    if not report.orbits:
        raise NoConvergenceError(
            f"No ({n},{config.m})-orbit found to analyse",
            error_code="NO_ORBIT_FOUND",
            details={"n": n, "m": config.m},
        )
    return report.orbits[0]


def outer_orbit(config: RunConfig) -> CommandResult:
    curve = load_curve(_require(config.curve))
    x0 = _point(config.start, 2, "--start")
    table = trajectory_table(curve, (x0[0], x0[1]), config.steps)
    points = table_points(table)
    closed = table.winding is not None
    vertices = points[: config.steps] if closed else points
    thetas = np.array([row[3] for row in table.rows[: len(vertices)]])
    scene = trajectory_scene(
        curve_points(curve),
        vertices,
        closed,
        markers=[to_vec2(p) for p in curve.positions(thetas)],
        title=f"Outer billiard trajectory from {x0}",
    )
    return CommandResult(text=format_table(table), scene=scene)


def symplectic_orbit(config: RunConfig) -> CommandResult:
    body = _load_table_or_body(_require(config.curve))
    if isinstance(body, Ellipsoid2n):
        x = _point(config.start, body.dim, "--start")
        y = _point(config.second, body.dim, "--next")
        points = iterate_2n(body, x, y, config.steps)
        scene = None
        if body.dim == 2:
            scene = trajectory_scene(
                ellipse_points(body), [to_vec2(p) for p in points], closed=False
            )
        return CommandResult(text=format_points_csv(points), scene=scene)

    t_prev, t_cur = _point(config.start, 2, "--start")
    states = iterate_chords(body, ChordState(t_prev=t_prev, t_cur=t_cur), config.steps)
    params = [t_prev, t_cur] + [s.t_cur for s in states]
    positions = body.positions(np.asarray(params))
    scene = trajectory_scene(
        curve_points(body), [to_vec2(p) for p in positions], closed=False
    )
    return CommandResult(text=format_chord_csv(params, positions), scene=scene)


def _search_result(curve: CurveModel, report: SearchReport, config: RunConfig) -> CommandResult:
    if config.csv is not None and report.orbits:
        write_orbit_csv(orbit_table(report.orbits[0]), config.csv)
    title = f"({report.n},{report.m})-orbits"
    scene = orbit_scene(curve, report.orbits, title)
    return CommandResult(text=summarize(report).model_dump_json() + "\n", scene=scene)


def find_periodic(config: RunConfig) -> CommandResult:
    curve = load_curve(_require(config.curve))
    n = config.n or 0
    if config.kind is SearchKind.SYMPLECTIC:
        report = symplectic_find_orbits(curve, n, config.grid or 16, config.m, seed=config.seed)
        if config.csv is not None:
            orbit = report.orbits[0]
            write_symplectic_csv(format_chord_csv(orbit.params, orbit.points), config.csv)
        scene = Scene(
            curve=curve_points(curve),
            orbits=[list(orbit.points) for orbit in report.orbits],
            title=f"symplectic ({n},{config.m})-orbits",
        )
        return CommandResult(text=summarize(report).model_dump_json() + "\n", scene=scene)
    report = find_orbits(curve, n, config.m, config.grid or 32, seed=config.seed)
    return _search_result(curve, report, config)


def through_tangency(config: RunConfig) -> CommandResult:
    curve = load_curve(_require(config.curve))
    report = orbits_through_tangency(
        curve, config.theta, config.n or 0, config.m, config.grid or 64, seed=config.seed
    )
    return _search_result(curve, report, config)


def monodromy(config: RunConfig) -> CommandResult:
    curve = load_curve(_require(config.curve))
    orbit = _first_orbit(curve, config)
    comparison = compare_monodromy(curve, orbit)
    return CommandResult(
        text=comparison.model_dump_json(indent=2) + "\n",
        scene=orbit_scene(curve, [orbit], f"({orbit.n},{orbit.winding})-orbit"),
    )


def certify(config: RunConfig) -> CommandResult:
    if config.word is not None:
        return CommandResult(text=render_report(certify_not_identity(load_word(config.word))))
    curve = load_curve(_require(config.curve))
    orbit = _first_orbit(curve, config)
    certificate = certify_not_identity(orbit_word(curve, orbit))
    return CommandResult(
        text=render_report(certificate),
        scene=orbit_scene(curve, [orbit], f"({orbit.n},{orbit.winding})-orbit"),
    )


def identity_family_command(config: RunConfig) -> CommandResult:
    word = identity_family(config.n or 0)
    return CommandResult(text=dump_word(word))


def octagon(config: RunConfig) -> CommandResult:
    table = build_table(config.radius, config.halfwidth)
    lines = [CycleLine.X1X8, CycleLine.X1X2] if config.line == "both" else [CycleLine(config.line)]
    report = OctagonReport(table=table, audit=consistency_audit(table))
    segments = []
    for line in lines:
        result = sweep(table, config.count, line, OCTAGON_MIN_OFFSET, OCTAGON_MAX_OFFSET)
        report.sweeps.append(result)
        first = eight_cycle(table, result.offsets[0], line)
        last = eight_cycle(table, result.offsets[-1], line)
        segments.append((first, last))
        if config.offset is not None:
            report.cycles.append(eight_cycle(table, config.offset, line))
    return CommandResult(
        text=report.model_dump_json(indent=2) + "\n", scene=octagon_scene(table, segments)
    )


def plot(config: RunConfig) -> CommandResult:
    body = _load_table_or_body(_require(config.curve))
    boundary = ellipse_points(body) if isinstance(body, Ellipsoid2n) else curve_points(body)
    scene = Scene(curve=boundary)
    if config.orbit is not None:
        table = read_orbit_csv(config.orbit)
        points = table_points(table)
        closed = table.winding is not None
        tol = settings.periodicity_tol
        repeats_start = len(points) > 1 and math.dist(points[-1], points[0]) <= tol
        if closed and repeats_start:
            points = points[:-1]
        scene = trajectory_scene(boundary, points, closed)
    return CommandResult(text=render_svg(scene), scene=None)


HANDLERS: dict[Command, Callable[[RunConfig], CommandResult]] = {
    Command.OUTER_ORBIT: outer_orbit,
    Command.SYMPLECTIC_ORBIT: symplectic_orbit,
    Command.FIND_PERIODIC: find_periodic,
    Command.THROUGH_TANGENCY: through_tangency,
    Command.MONODROMY: monodromy,
    Command.CERTIFY: certify,
    Command.IDENTITY_FAMILY: identity_family_command,
    Command.OCTAGON: octagon,
    Command.PLOT: plot,
}


def execute(config: RunConfig) -> CommandResult:
    """設定に対応する操作を実行"""
    logger.info(f"Running {config.command.value}")
    with tolerance_override(config):
        return HANDLERS[config.command](config)
