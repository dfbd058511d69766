"""
Command groups: each module of `app.commands` registers its commands on a
CommandGroup, and the package aggregates the groups into one dispatcher.
"""

import argparse
import logging
from dataclasses import dataclass, field
from typing import Any, Callable

from app.exceptions import (
    DomainMismatch,
    InvalidTarget,
    JoinShapeMismatch,
    ParseError,
    StackUnderflow,
    UnsupportedAbstractOp,
)
from app.models.enums import ExitCode

logger = logging.getLogger(__name__)

INPUT_ERRORS = (ParseError, InvalidTarget, DomainMismatch, OSError)
ANALYSIS_ERRORS = (StackUnderflow, UnsupportedAbstractOp, JoinShapeMismatch)


@dataclass
class CommandOutput:
    lines: list[str] = field(default_factory=list)
    code: ExitCode = ExitCode.ok
    errors: list[str] = field(default_factory=list)


def solution_code(count: int) -> ExitCode:
    return ExitCode.ok if count else ExitCode.no_solution


def arg(*flags: str, **kwargs: Any) -> tuple[tuple[str, ...], dict[str, Any]]:
    return flags, kwargs


@dataclass
class _Entry:
    name: str
    help: str
    arguments: list
    handler: Callable[[Any], CommandOutput]


class CommandGroup:
    def __init__(self):
        self.entries: dict[str, _Entry] = {}

    def command(self, schema, help: str, arguments=()):
        """Register the decorated handler for `schema`'s command name."""
        name = schema.model_fields["command"].default

        def decorator(handler):
            self.entries[name] = _Entry(name, help, list(arguments), handler)
            return handler

        return decorator

    def include(self, group: "CommandGroup") -> None:
        self.entries.update(group.entries)

    def add_subparsers(self, subparsers: argparse._SubParsersAction) -> None:
        for entry in self.entries.values():
            parser = subparsers.add_parser(entry.name, help=entry.help)
            for flags, kwargs in entry.arguments:
                parser.add_argument(*flags, **kwargs)

    def dispatch(self, cmd) -> CommandOutput:
        """
        Run one validated command.

        Args:
            cmd: A command model from `app.schemas.commands`

        Returns:
            CommandOutput whose code follows the exit-code table: input errors
            map to 2 and analysis errors to 3
        """
        entry = self.entries[cmd.command]
        try:
            return entry.handler(cmd)
        except INPUT_ERRORS as e:
            logger.debug("input error in %s: %s", cmd.command, e)
            return CommandOutput(code=ExitCode.parse_error, errors=[str(e)])
        except ANALYSIS_ERRORS as e:
            logger.debug("analysis error in %s: %s", cmd.command, e)
            return CommandOutput(code=ExitCode.analysis_error, errors=[str(e)])
        except RecursionError:
            logger.debug("recursion limit hit in %s", cmd.command)
            return CommandOutput(code=ExitCode.analysis_error, errors=["input nests too deeply"])
