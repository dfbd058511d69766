import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from app import config
from app.commands import commands
from app.models.enums import ExitCode
from app.schemas.commands import command_adapter


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app.main",
        description="Program analysis toolkit: bytecode interpretation, sign analysis, "
                    "type inference, propositional solving, process exploration and coroutining.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands.add_subparsers(subparsers)
    return parser


def configure_logging() -> None:
    # stdout carries results only; diagnostics go to stderr
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging()
    try:
        cmd = command_adapter.validate_python(vars(args))
    except ValidationError as e:
        for error in e.errors():
            where = ".".join(str(part) for part in error["loc"][1:])
            print(f"error: {where}: {error['msg']}", file=sys.stderr)
        return ExitCode.parse_error
    result = commands.dispatch(cmd)
    for line in result.lines:
        print(line)
    for error in result.errors:
        print(f"error: {error}", file=sys.stderr)
    return int(result.code)


if __name__ == "__main__":
    sys.exit(main())
