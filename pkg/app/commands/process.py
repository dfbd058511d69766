from app import config
from app.commands.base import CommandGroup, CommandOutput, arg, solution_code
from app.models.enums import SearchStrategy
from app.models.process import render_process
from app.schemas.commands import ProcReachCommand, ProcStepCommand, ProcTracesCommand
from app.services.process_algebra import find_deadlock, reachable, runs, transitions
from app.utils.process_parser import parse_process
from app.utils.rendering import answer_lines

group = CommandGroup()


def step_text(text: str) -> CommandOutput:
    p = parse_process(text.strip().rstrip("."))
    answers = ([("A", action), ("R", render_process(q))] for action, q in transitions(p))
    lines, count = answer_lines(answers, None)
    return CommandOutput(lines, solution_code(count))


def traces_text(text: str, length: int, limit: int = config.SOLUTION_LIMIT) -> CommandOutput:
    p = parse_process(text.strip().rstrip("."))
    answers = (
        [(f"A{i}", action) for i, action in enumerate(actions, start=1)]
        + [(f"R{length}", render_process(final))]
        for actions, final in runs(p, length)
    )
    lines, count = answer_lines(answers, limit)
    return CommandOutput(lines, solution_code(count))


def reach_text(
    text: str,
    strategy: SearchStrategy = SearchStrategy.bfs,
    progress: bool = False,
    deadlock_trace: bool = False,
) -> CommandOutput:
    p = parse_process(text.strip().rstrip("."))
    report = reachable(p, strategy, show_progress=progress)
    lines = [f"states: {len(report.states)}", f"deadlocks: {len(report.deadlocks)}"]
    lines.extend(f"deadlock: {render_process(state)}" for state in report.deadlocks)
    if deadlock_trace:
        trace = find_deadlock(p, strategy)
        lines.append("deadlock trace: none" if trace is None else f"deadlock trace: [{','.join(trace)}]")
    return CommandOutput(lines)


@group.command(ProcStepCommand, help="list the transitions of a process", arguments=[
    arg("process"),
])
def step_command(cmd: ProcStepCommand) -> CommandOutput:
    return step_text(cmd.process)


@group.command(ProcTracesCommand, help="list traces of a given length", arguments=[
    arg("process"),
    arg("--length", type=int, default=2),
    arg("--limit", type=int, default=config.SOLUTION_LIMIT),
])
def traces_command(cmd: ProcTracesCommand) -> CommandOutput:
    return traces_text(cmd.process, cmd.length, cmd.limit)


@group.command(ProcReachCommand, help="explore the reachable state space", arguments=[
    arg("process"),
    arg("--strategy", choices=[s.value for s in SearchStrategy], default=config.REACH_STRATEGY),
    arg("--progress", action="store_true", default=config.SHOW_PROGRESS),
    arg("--deadlock-trace", action="store_true"),
])
def reach_command(cmd: ProcReachCommand) -> CommandOutput:
    return reach_text(cmd.process, cmd.strategy, cmd.progress, cmd.deadlock_trace)
