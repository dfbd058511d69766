"""
Command models, one per CLI command. Argument values coming from argparse
(or from the REPL) are validated here before any analysis runs.
"""

from pathlib import Path
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, FilePath, TypeAdapter, field_validator

from app import config
from app.models.enums import PropMode, ReplMode, SearchStrategy


class CommandModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="ignore")


class TextCommand(CommandModel):
    """Commands whose main argument is object-language text."""

    # never the `command` discriminator: pydantic rejects before-validators on it
    @field_validator("pattern", "formula", "process", "goals", mode="before", check_fields=False)
    @classmethod
    def strip_text(cls, v):
        return v.strip() if isinstance(v, str) else v


# Bytecode

class RunCommand(CommandModel):
    command: Literal["run"] = "run"
    bytecode: FilePath
    domain: Literal["concrete", "sign"] = "concrete"


class PathsCommand(CommandModel):
    command: Literal["paths"] = "paths"
    bytecode: FilePath
    limit: int = Field(default=config.PATH_LIMIT, gt=0)
    full_traces: bool = False


class FixpointCommand(CommandModel):
    command: Literal["fixpoint"] = "fixpoint"
    bytecode: FilePath


class QueryCommand(TextCommand):
    command: Literal["query"] = "query"
    bytecode: FilePath
    pattern: str = Field(min_length=1)
    limit: int = Field(default=config.SOLUTION_LIMIT, gt=0)


# Type inference and propositional logic

class TypeCheckCommand(TextCommand):
    command: Literal["typecheck"] = "typecheck"
    # formula text, or `@path` naming a file that holds it
    formula: str = Field(min_length=1)

    @field_validator("formula")
    @classmethod
    def source_file_exists(cls, v: str) -> str:
        if v.startswith("@") and not Path(v[1:]).is_file():
            raise ValueError(f"no such file: {v[1:]}")
        return v


class PropCommand(TextCommand):
    command: Literal["prop"] = "prop"
    formula: str = Field(min_length=1)
    mode: PropMode = PropMode.sat
    limit: int = Field(default=config.SOLUTION_LIMIT, gt=0)


# Process algebra

class ProcStepCommand(TextCommand):
    command: Literal["proc-step"] = "proc-step"
    process: str = Field(min_length=1)


class ProcTracesCommand(TextCommand):
    command: Literal["proc-traces"] = "proc-traces"
    process: str = Field(min_length=1)
    length: int = Field(ge=0)
    limit: int = Field(default=config.SOLUTION_LIMIT, gt=0)


class ProcReachCommand(TextCommand):
    command: Literal["proc-reach"] = "proc-reach"
    process: str = Field(min_length=1)
    strategy: SearchStrategy = SearchStrategy(config.REACH_STRATEGY)
    progress: bool = config.SHOW_PROGRESS
    deadlock_trace: bool = False


# Goals and the REPL

class SolveCommand(TextCommand):
    command: Literal["solve"] = "solve"
    goals: str = Field(min_length=1)
    limit: int = Field(default=config.SOLUTION_LIMIT, gt=0)


class ReplCommand(CommandModel):
    command: Literal["repl"] = "repl"
    mode: ReplMode = ReplMode.prop
    load: Optional[FilePath] = None
    record: Optional[Path] = None


Command = Annotated[
    Union[
        RunCommand,
        PathsCommand,
        FixpointCommand,
        QueryCommand,
        TypeCheckCommand,
        PropCommand,
        ProcStepCommand,
        ProcTracesCommand,
        ProcReachCommand,
        SolveCommand,
        ReplCommand,
    ],
    Field(discriminator="command"),
]

command_adapter = TypeAdapter(Command)
