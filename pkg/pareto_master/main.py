"""pareto-master - 다중모드 네트워크 Pareto 최적 경로 CLI

종료 코드: 0 성공, 1 경로 없음, 2 사용법 오류, 3 리소스 상한
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from loguru import logger
from rich.console import Console
from rich.markup import escape

from .cli.commands import CommandHandler, get_command_description
from .core.config import config
from .core.errors import ParetoError
from .core.log import setup_logging


def _add_limits(parser: argparse.ArgumentParser) -> None:
    """solver 리소스 상한 옵션 (기본값은 config)"""
    parser.add_argument("--max-labels", type=int, default=None, help="생성 라벨 수 상한")
    parser.add_argument(
        "--time-budget", type=float, default=None, help="실행 시간 상한(초), 0이면 무제한"
    )


def _add_output(parser: argparse.ArgumentParser, formats: bool = True) -> None:
    if formats:
        parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", type=Path, default=None, help="출력 파일 (기본: stdout)")
    parser.add_argument("--no-timing", action="store_true", help="ms 값을 0으로 기록")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pareto-master",
        description="가중 색상-간선 그래프의 Pareto 최적 경로 계산",
    )
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    p = sub.add_parser("solve", help=get_command_description("solve"))
    p.add_argument("graph", type=Path)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--keep-ties", action="store_true", help="같은 가중치 경로 모두 유지")
    p.add_argument("--augment", choices=("hops", "transfers"), default=None)
    _add_output(p)
    _add_limits(p)

    p = sub.add_parser("oracle", help=get_command_description("oracle"))
    p.add_argument("graph", type=Path)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--keep-ties", action="store_true")
    p.add_argument("--ceiling", type=int, default=None, help="열거 경로 수 상한")
    _add_output(p)

    p = sub.add_parser("generate", help=get_command_description("generate"))
    p.add_argument("kind", choices=("complete", "sparse", "layers"))
    p.add_argument("--n", type=int, required=True, help="정점 수 (layers: layer별 junction 수)")
    p.add_argument("--k", type=int, required=True, help="색상 수 (layers: layer 수)")
    p.add_argument("--m", type=int, default=None, help="간선 수 (sparse)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--scale", type=int, default=config.DEFAULT_SCALE)
    p.add_argument("--low", type=float, default=None)
    p.add_argument("--high", type=float, default=None)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("bench", help=get_command_description("bench"))
    p.add_argument("--k", default="2", help="색상 수 (쉼표 구분 목록 가능)")
    p.add_argument("--n-list", required=True, help="예: 20,40,80")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", type=Path, default=None, help="CSV 파일 (기본: stdout)")
    p.add_argument("--plot", type=Path, default=None, help="gnuplot 데이터 파일")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--low", type=float, default=None)
    p.add_argument("--high", type=float, default=None)
    p.add_argument("--no-timing", action="store_true")
    _add_limits(p)

    p = sub.add_parser("sensitivity", help=get_command_description("sensitivity"))
    p.add_argument("graph", type=Path)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--sweep-colour", required=True)
    p.add_argument("--factors", default=None, help="예: 1,1.2,1.25")
    p.add_argument("--base", default=None, help="색상별 기준 배율 (기본: 모두 1)")
    _add_limits(p)

    p = sub.add_parser("assemble", help=get_command_description("assemble"))
    p.add_argument("--layers", required=True, help="쉼표 구분 layer 파일 목록")
    p.add_argument("--cluster-distance", type=float, required=True)
    p.add_argument("--scale", type=int, default=6)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--source", default=None, help="<layer>:<junction> 에서 solve 후 보고")
    p.add_argument("--no-timing", action="store_true")
    _add_limits(p)

    p = sub.add_parser("stats", help=get_command_description("stats"))
    p.add_argument("--layers", required=True)

    return parser


def run(
    argv: Sequence[str] | None = None,
    console: Console | None = None,
    err_console: Console | None = None,
) -> int:
    """CLI 실행 후 종료 코드 반환"""
    err_console = err_console or Console(stderr=True)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse는 사용법 오류에 2, --help에 0으로 종료
        return int(e.code or 0)

    handler = CommandHandler(console or Console(), err_console)
    try:
        return handler.handle(args.command, args)
    except ParetoError as e:
        logger.opt(exception=e).warning("명령어 실패 ({}): {}", args.command, e)
        err_console.print(f"[red]오류:[/red] {escape(str(e))}", highlight=False)
        return e.exit_code


def main() -> None:
    setup_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
