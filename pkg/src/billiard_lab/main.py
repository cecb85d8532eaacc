"""Billiard Lab - コマンドラインのエントリポイント"""
import logging
import sys
from collections.abc import Sequence

from .cli import RunConfigError, build_parser, build_run_config, emit_svg, execute
from .cli.schemas import Command
from .core import BilliardLabError, settings, write_text

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool) -> None:
    """ルートロガーを設定（--verbose で INFO）"""
    level = logging.INFO if verbose else settings.log_level.upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def run(argv: Sequence[str] | None = None) -> int:
    """CLI を実行して終了コードを返す

    0: 成功、1: 計算・入出力のエラー、2: 引数の誤り
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)
    try:
        config = build_run_config(vars(args))
    except RunConfigError as e:
        parser.print_usage(sys.stderr)
        print(f"{type(e).__name__}: {e.message}", file=sys.stderr)
        return 2

    try:
        result = execute(config)
        if config.output is not None:
            write_text(config.output, result.text, "OUTPUT_WRITE_FAILED")
        else:
            sys.stdout.write(result.text)
        if config.plot is not None:
            if result.scene is not None:
                emit_svg(result.scene, config.plot)
            elif config.command is Command.PLOT:
                write_text(config.plot, result.text, "SVG_WRITE_FAILED")
            else:
                logger.warning(f"{config.command.value} has nothing to plot; --plot ignored")
    except RunConfigError as e:
        parser.print_usage(sys.stderr)
        print(f"{type(e).__name__}: {e.message}", file=sys.stderr)
        return 2
    except BilliardLabError as e:
        logger.debug(f"{config.command.value} failed: {e.error_code} {e.details}")
        print(f"{type(e).__name__}: {e.message}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
