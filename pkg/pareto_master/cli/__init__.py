"""CLI 계층 - 서브커맨드 처리"""

from .commands import CommandHandler, command, get_command_names

__all__ = [
    "CommandHandler",
    "command",
    "get_command_names",
]
