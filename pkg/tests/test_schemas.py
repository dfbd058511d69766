"""Tests for the command models built from CLI arguments."""

import subprocess
import sys

import pytest
from pydantic import ValidationError

from app.schemas.commands import (
    ProcReachCommand,
    PropCommand,
    QueryCommand,
    SolveCommand,
    TypeCheckCommand,
    command_adapter,
)
from tests.conftest import ROOT, SAMPLES

COUNTDOWN = str(SAMPLES / "countdown.bc")


def test_fresh_import():
    result = subprocess.run(
        [sys.executable, "-c", "import app.schemas.commands, app.commands, app.main"],
        cwd=ROOT,
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr


class TestCommandAdapter:
    """The discriminated union picks the model named by `command`."""

    @pytest.mark.parametrize("args, model, field, value", [
        ({"command": "query", "bytecode": COUNTDOWN, "pattern": "  instr(PC,dup,_) "}, QueryCommand, "pattern", "instr(PC,dup,_)"),
        ({"command": "typecheck", "formula": " eq(x,1)\n"}, TypeCheckCommand, "formula", "eq(x,1)"),
        ({"command": "prop", "formula": " const(X) "}, PropCommand, "formula", "const(X)"),
        ({"command": "proc-reach", "process": " a->stop "}, ProcReachCommand, "process", "a->stop"),
        ({"command": "solve", "goals": "\tnat(X) "}, SolveCommand, "goals", "nat(X)"),
    ])
    def test_text_arguments_stripped(self, args, model, field, value):
        cmd = command_adapter.validate_python(args)
        assert isinstance(cmd, model)
        assert getattr(cmd, field) == value

    def test_blank_text_rejected(self):
        with pytest.raises(ValidationError):
            command_adapter.validate_python({"command": "solve", "goals": "   "})

    def test_unknown_command(self):
        with pytest.raises(ValidationError):
            command_adapter.validate_python({"command": "compile"})

    def test_missing_formula_file(self, tmp_path):
        with pytest.raises(ValidationError):
            command_adapter.validate_python({"command": "typecheck", "formula": f"@{tmp_path / 'none.txt'}"})
