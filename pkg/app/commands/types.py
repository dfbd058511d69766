from pathlib import Path

from app.commands.base import CommandGroup, CommandOutput, arg
from app.models.enums import ExitCode
from app.schemas.commands import TypeCheckCommand
from app.services.type_inference import TypeOk, infer, render_result
from app.utils.object_syntax import parse_expr

group = CommandGroup()


def typecheck_text(text: str) -> CommandOutput:
    result = infer(parse_expr(text.strip().rstrip(".")))
    code = ExitCode.ok if isinstance(result, TypeOk) else ExitCode.no_solution
    return CommandOutput(render_result(result), code)


@group.command(TypeCheckCommand, help="infer the types of a set/integer formula", arguments=[
    arg("formula", help="formula text, or @file to read it from a file"),
])
def typecheck_command(cmd: TypeCheckCommand) -> CommandOutput:
    text = cmd.formula
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    return typecheck_text(text)
