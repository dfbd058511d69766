"""
Interactive read-eval-print loop over the object languages.

Each input line is evaluated in the current mode and prints what the
matching CLI command would print. Lines starting with `:` are meta
commands: `:mode <mode>`, `:load <file>`, `:record <file>` and `:quit`.
With recording on, every evaluated line is appended to a corpus file so a
session doubles as a unit-test generator.
"""

import logging
import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

from app import config
from app.commands.base import CommandGroup, CommandOutput, arg
from app.commands.bytecode import program_fixpoint, program_paths, program_query, run_program
from app.commands.goals import solve_text
from app.commands.process import step_text, traces_text
from app.commands.prop import prop_text
from app.commands.types import typecheck_text
from app.exceptions import AnalysisError
from app.models.bytecode import Program
from app.models.enums import ExitCode, PropMode, ReplMode
from app.schemas.commands import ReplCommand
from app.utils.bytecode_parser import load_program
from app.utils.corpus import CorpusRecord, append_record

logger = logging.getLogger(__name__)

group = CommandGroup()


class Repl:
    def __init__(self, mode: ReplMode = ReplMode.prop, record: Optional[Union[str, Path]] = None,
                 program: Optional[Program] = None):
        self.mode = ReplMode(mode)
        self.record = Path(record) if record else None
        self.program = program

    # ---- evaluation ----

    def evaluate(self, line: str) -> list[str]:
        """Evaluate one object-language line in the current mode."""
        line = line.strip()
        if not line:
            return []
        try:
            lines = self._evaluate(line).lines
        except (AnalysisError, ValueError, OSError, RecursionError) as e:
            lines = [f"error: {e}"]
        if self.record is not None:
            append_record(self.record, CorpusRecord(mode=self.mode, input=line, output="\n".join(lines)))
        return lines

    def _evaluate(self, line: str) -> CommandOutput:
        if self.mode is ReplMode.bytecode:
            return self._bytecode(line)
        if self.mode is ReplMode.type:
            return typecheck_text(line)
        if self.mode is ReplMode.prop:
            return prop_text(line, PropMode.sat)
        if self.mode is ReplMode.nprop:
            return prop_text(line, PropMode.nsat)
        if self.mode is ReplMode.proc:
            return step_text(line)
        if self.mode is ReplMode.traces:
            length, _, process = line.partition(" ")
            return traces_text(process, int(length))
        return solve_text(line)

    def _bytecode(self, line: str) -> CommandOutput:
        if self.program is None:
            raise ValueError("no program loaded, use :load <file>")
        words = line.split()
        if words == ["run"]:
            return run_program(self.program)
        if words[0] == "paths" and len(words) <= 2:
            limit = int(words[1]) if len(words) == 2 else config.PATH_LIMIT
            return program_paths(self.program, limit)
        if words == ["fixpoint"]:
            return program_fixpoint(self.program)
        return program_query(self.program, line, config.SOLUTION_LIMIT)

    # ---- meta commands ----

    def handle(self, line: str) -> Optional[list[str]]:
        """Output for one input line; None once the loop should stop."""
        stripped = line.strip()
        if not stripped.startswith(":"):
            return self.evaluate(stripped)
        name, _, argument = stripped[1:].partition(" ")
        argument = argument.strip()
        if name == "quit":
            return None
        if name == "mode":
            try:
                self.mode = ReplMode(argument)
            except ValueError:
                return [f"error: unknown mode {argument!r}, expected one of {', '.join(m.value for m in ReplMode)}"]
            return [f"mode: {self.mode.value}"]
        if name == "record":
            if not argument:
                return ["error: :record needs a file name"]
            self.record = Path(argument)
            return [f"recording to {argument}"]
        if name == "load":
            return self.load(argument)
        return [f"error: unknown command :{name}"]

    def load(self, path: str) -> list[str]:
        try:
            if self.mode is ReplMode.bytecode:
                self.program = load_program(path)
                return [f"loaded {len(self.program)} instructions from {path}"]
            source = Path(path).read_text(encoding="utf-8")
        except (AnalysisError, OSError) as e:
            return [f"error: {e}"]
        output: list[str] = []
        for line in source.splitlines():
            if line.strip() and not line.lstrip().startswith("%"):
                output.extend(self.evaluate(line))
        return output

    def loop(self, stream: Iterable[str], out: TextIO, prompt: str = "") -> ExitCode:
        """Read lines from `stream` until `:quit` or end of input."""
        if prompt:
            out.write(prompt)
            out.flush()
        for line in stream:
            result = self.handle(line)
            if result is None:
                break
            for text in result:
                out.write(text + "\n")
            if prompt:
                out.write(prompt)
                out.flush()
        logger.debug("repl finished in mode %s", self.mode.value)
        return ExitCode.ok


@group.command(ReplCommand, help="interactive loop over one object language", arguments=[
    arg("--mode", choices=[m.value for m in ReplMode], default=ReplMode.prop.value),
    arg("--load", type=Path, help="bytecode program or file of input lines to evaluate first"),
    arg("--record", type=Path, help="append evaluated lines to this corpus file"),
])
def repl_command(cmd: ReplCommand) -> CommandOutput:
    repl = Repl(cmd.mode, cmd.record)
    if cmd.load is not None:
        for text in repl.load(str(cmd.load)):
            print(text)
    prompt = config.REPL_PROMPT if sys.stdin.isatty() else ""
    return CommandOutput(code=repl.loop(sys.stdin, sys.stdout, prompt))
