from app import config
from app.commands.base import CommandGroup, CommandOutput, arg, solution_code
from app.models.enums import PropMode
from app.models.term import Substitution
from app.schemas.commands import PropCommand
from app.services.prop_logic import nsat, sat
from app.utils.object_syntax import parse_formula
from app.utils.rendering import answer_bindings, answer_lines

group = CommandGroup()


def prop_text(text: str, mode: PropMode = PropMode.sat, limit: int = config.SOLUTION_LIMIT) -> CommandOutput:
    """Solutions making the formula true (`sat`) or false (`nsat`)."""
    formula, names = parse_formula(text.strip().rstrip("."))
    solver = sat if PropMode(mode) is PropMode.sat else nsat
    answers = (answer_bindings(names, s) for s in solver(formula, Substitution.empty()))
    lines, count = answer_lines(answers, limit)
    return CommandOutput(lines, solution_code(count))


@group.command(PropCommand, help="solve a propositional formula", arguments=[
    arg("formula"),
    arg("--mode", choices=[m.value for m in PropMode], default=PropMode.sat.value),
    arg("--limit", type=int, default=config.SOLUTION_LIMIT),
])
def prop_command(cmd: PropCommand) -> CommandOutput:
    return prop_text(cmd.formula, cmd.mode, cmd.limit)
