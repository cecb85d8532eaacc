"""コマンドライン引数の定義"""
import argparse
from pathlib import Path

from ..core.config import settings
from .schemas import Command, SearchKind


def float_list(text: str) -> list[float]:
    """"2,0" のようなカンマ区切りの数値列"""
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", type=Path, help="結果の書き出し先（省略時は標準出力）")
    common.add_argument("--plot", type=Path, help="SVG の書き出し先")
    common.add_argument("--tolerance", type=float, help="周期性判定の許容誤差（>= 1e-14）")
    common.add_argument("--seed", type=int, help="乱数シード（BILLIARD_SEED を上書き）")
    common.add_argument("--verbose", action="store_true", help="INFO ログを表示")
    return common


def build_parser() -> argparse.ArgumentParser:
    """サブコマンドごとの引数を持つパーサ"""
    parser = argparse.ArgumentParser(
        prog="billiard-lab",
        description=f"{settings.app_name} {settings.version}: outer and symplectic billiards",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common_options()

    def add(command: Command, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(command.value, parents=[common], help=help_text)

    p = add(Command.OUTER_ORBIT, "iterate the outer billiard map")
    p.add_argument("--curve", type=Path, required=True, help="曲線指定 JSON")
    p.add_argument("--start", type=float_list, required=True, metavar="X,Y")
    p.add_argument("--steps", type=int, default=10)

    p = add(Command.SYMPLECTIC_ORBIT, "iterate the symplectic billiard map")
    p.add_argument("--curve", type=Path, required=True, help="曲線または楕円体指定 JSON")
    p.add_argument(
        "--start", type=float_list, required=True, metavar="T_PREV,T_CUR | X1,..,X2N"
    )
    p.add_argument("--next", dest="second", type=float_list, metavar="Y1,..,Y2N")
    p.add_argument("--steps", type=int, default=10)

    p = add(Command.FIND_PERIODIC, "multistart search for periodic orbits")
    p.add_argument("--curve", type=Path, required=True)
    p.add_argument("--kind", type=SearchKind, choices=list(SearchKind), default=SearchKind.OUTER)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--grid", type=int)
    p.add_argument("--csv", type=Path, help="最初の軌道の CSV")

    p = add(Command.THROUGH_TANGENCY, "periodic orbits through a fixed tangency point")
    p.add_argument("--curve", type=Path, required=True)
    p.add_argument("--theta", type=float, required=True, help="接点の法線角")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--grid", type=int)
    p.add_argument("--csv", type=Path)

    p = add(Command.MONODROMY, "analytic vs numeric monodromy of a periodic orbit")
    p.add_argument("--curve", type=Path, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--start", type=float_list, metavar="X,Y", help="省略時は探索")

    p = add(Command.CERTIFY, "non-identity certificate for a shear-rotation word")
    p.add_argument("--word", type=Path, help="語ファイル JSON")
    p.add_argument("--curve", type=Path)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--start", type=float_list, metavar="X,Y")

    p = add(Command.IDENTITY_FAMILY, "word whose product is the identity")
    p.add_argument("--n", type=int, required=True)

    p = add(Command.OCTAGON, "octagon table with hyperbola arcs and 8-periodic segments")
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--halfwidth", type=float)
    p.add_argument("--offset", type=float, help="この値のずれでの軌道も出力")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--line", choices=["x1x8", "x1x2", "both"], default="both")

    p = add(Command.PLOT, "SVG of a curve and an orbit CSV")
    p.add_argument("--curve", type=Path, required=True)
    p.add_argument("--orbit", type=Path, help="軌道 CSV")

    return parser
