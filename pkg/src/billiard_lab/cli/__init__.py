"""コマンドライン・入出力モジュール"""

from .commands import HANDLERS, CommandResult, execute
from .exceptions import RunConfigError
from .parser import build_parser, float_list
from .schemas import Command, RunConfig, SearchKind, build_run_config
from .svg import Scene, emit_svg, render_svg

__all__ = [
    "build_parser",
    "float_list",
    "execute",
    "HANDLERS",
    "CommandResult",
    "Command",
    "SearchKind",
    "RunConfig",
    "build_run_config",
    "RunConfigError",
    "Scene",
    "emit_svg",
    "render_svg",
]
