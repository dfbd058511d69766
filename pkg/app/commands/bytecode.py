"""Commands over bytecode files: concrete runs, abstract paths, fixpoint tables, instruction lookup."""

from pathlib import Path

from app import config
from app.commands.base import CommandGroup, CommandOutput, arg, solution_code
from app.exceptions import StackUnderflow
from app.models.bytecode import MachineEnv, Program
from app.models.enums import ExitCode
from app.schemas.commands import FixpointCommand, PathsCommand, QueryCommand, RunCommand
from app.services.abstract_interp import analyze_fixpoint, enumerate_paths
from app.services.domains import DOMAINS
from app.services.instruction_query import query_instructions
from app.services.interpreter import run
from app.utils.bytecode_parser import load_program
from app.utils.rendering import answer_bindings, answer_lines, path_lines
from app.utils.term_parser import parse_term

group = CommandGroup()


def run_program(program: Program, domain: str = "concrete") -> CommandOutput:
    failures: list[StackUnderflow] = []
    result = next(run(program, 0, MachineEnv(), DOMAINS[domain], on_failure=failures.append), None)
    if result is None:
        if failures:
            raise failures[0]
        return CommandOutput(["no"], ExitCode.no_solution)
    lines = [str(entry) for entry in result.trace]
    lines.append(f"Out = {result.env}")
    return CommandOutput(lines)


def program_paths(program: Program, limit: int, full_traces: bool = False) -> CommandOutput:
    results = enumerate_paths(program, MachineEnv(), limit)
    lines = list(path_lines(results, "R", full_traces))
    if len(results) < limit:
        lines.append("no")
    return CommandOutput(lines, solution_code(len(results)))


def program_fixpoint(program: Program) -> CommandOutput:
    return CommandOutput(analyze_fixpoint(program).report_lines())


def program_query(program: Program, pattern: str, limit: int) -> CommandOutput:
    term, names = parse_term(pattern.rstrip(". "))
    answers = (answer_bindings(names, s) for s in query_instructions(program, term))
    lines, count = answer_lines(answers, limit)
    return CommandOutput(lines, solution_code(count))


@group.command(RunCommand, help="run a bytecode program and print its trace", arguments=[
    arg("bytecode", type=Path),
    arg("--domain", choices=["concrete", "sign"], default="concrete"),
])
def run_command(cmd: RunCommand) -> CommandOutput:
    return run_program(load_program(cmd.bytecode), cmd.domain)


@group.command(PathsCommand, help="enumerate abstract execution paths", arguments=[
    arg("bytecode", type=Path),
    arg("--limit", type=int, default=config.PATH_LIMIT),
    arg("--full-traces", action="store_true"),
])
def paths_command(cmd: PathsCommand) -> CommandOutput:
    return program_paths(load_program(cmd.bytecode), cmd.limit, cmd.full_traces)


@group.command(FixpointCommand, help="print the per-pc sign analysis table", arguments=[
    arg("bytecode", type=Path),
])
def fixpoint_command(cmd: FixpointCommand) -> CommandOutput:
    return program_fixpoint(load_program(cmd.bytecode))


@group.command(QueryCommand, help="look up instructions matching instr(PC,Opcode,Size)", arguments=[
    arg("bytecode", type=Path),
    arg("pattern"),
    arg("--limit", type=int, default=config.SOLUTION_LIMIT),
])
def query_command(cmd: QueryCommand) -> CommandOutput:
    return program_query(load_program(cmd.bytecode), cmd.pattern, cmd.limit)
