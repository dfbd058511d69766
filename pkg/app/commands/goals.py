from app import config
from app.commands.base import CommandGroup, CommandOutput, arg
from app.models.enums import ExitCode
from app.models.goals import Floundered
from app.schemas.commands import SolveCommand
from app.services.suspension import resolve_goal, solve
from app.utils.object_syntax import parse_goals
from app.utils.rendering import answer_bindings, format_answer

group = CommandGroup()


def solve_text(text: str, limit: int = config.SOLUTION_LIMIT) -> CommandOutput:
    """
    Solve a goal list with delayed goals.

    Args:
        text: Comma-separated goals
        limit: Maximum number of outcomes to print

    Returns:
        One block per outcome (bindings, or `floundered: <goals>` for a
        branch left with only suspended goals), then `no` if the outcomes
        ran out before the limit. Exit 0 with a success, 4 when every
        outcome floundered, 1 when there was none.
    """
    goals, names = parse_goals(text)
    outcomes = solve(goals)
    lines: list[str] = []
    successes = floundered = 0
    for _ in range(limit):
        outcome = next(outcomes, None)
        if outcome is None:
            lines.append("no")
            break
        if isinstance(outcome, Floundered):
            floundered += 1
            pending = ", ".join(str(resolve_goal(g, outcome.subst)) for g in outcome.suspended)
            lines.append(f"floundered: {pending}")
        else:
            successes += 1
            lines.extend(format_answer(answer_bindings(names, outcome.subst)))
    if successes:
        return CommandOutput(lines)
    return CommandOutput(lines, ExitCode.floundered if floundered else ExitCode.no_solution)


@group.command(SolveCommand, help="solve goals with coroutining (plus/3, nat/1, safe_not/1, =)", arguments=[
    arg("goals"),
    arg("--limit", type=int, default=config.SOLUTION_LIMIT),
])
def solve_command(cmd: SolveCommand) -> CommandOutput:
    return solve_text(cmd.goals, cmd.limit)
