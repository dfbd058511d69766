"""
Bytecode program model: opcodes, `instr(PC,Opcode,Size)` facts, programs and
machine environments.

Opcodes, instructions and programs are pydantic models so that the program
invariants are checked once, at construction, whatever the input source.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Annotated, Any, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.exceptions import InvalidTarget, StackUnderflow
from app.models.enums import ArithOp, CmpOp, Sign

# A constant as written in the program text; the value domain decides what it means.
DomainConst = Union[int, Sign]


class _Opcode(BaseModel):
    model_config = ConfigDict(frozen=True)


class IConst(_Opcode):
    kind: Literal["iconst"] = "iconst"
    value: DomainConst

    def __str__(self) -> str:
        return f"iconst({self.value})"


class IOp(_Opcode):
    kind: Literal["iop"] = "iop"
    op: ArithOp

    def __str__(self) -> str:
        return f"iop({self.op})"


class Dup(_Opcode):
    kind: Literal["dup"] = "dup"

    def __str__(self) -> str:
        return "dup"


class If1(_Opcode):
    kind: Literal["if1"] = "if1"
    cmp: CmpOp
    const: DomainConst
    target: int

    def __str__(self) -> str:
        return f"if1({self.cmp},{self.const},{self.target})"


class Return(_Opcode):
    kind: Literal["return"] = "return"

    def __str__(self) -> str:
        return "return"


Opcode = Annotated[Union[IConst, IOp, Dup, If1, Return], Field(discriminator="kind")]


class Instruction(BaseModel):
    """One `instr(PC,Opcode,Size)` fact."""

    model_config = ConfigDict(frozen=True)

    pc: int
    opcode: Opcode
    size: int

    @field_validator("pc")
    def pc_must_be_offset(cls, v):
        if v < 0:
            raise ValueError("pc must be a non-negative byte offset")
        return v

    @field_validator("size")
    def size_must_be_valid(cls, v):
        if v < 0:
            raise ValueError("size must be a non-negative byte count")
        return v

    @model_validator(mode="after")
    def only_return_has_no_size(self):
        if self.size == 0 and not isinstance(self.opcode, Return):
            raise ValueError(f"only return may have size 0 (pc {self.pc})")
        return self

    @property
    def next_pc(self) -> int:
        return self.pc + self.size

    def __str__(self) -> str:
        return f"instr({self.pc},{self.opcode},{self.size})."


class Program(BaseModel):
    """Instruction database keyed by pc; entry point is pc 0."""

    model_config = ConfigDict(frozen=True)

    instructions: dict[int, Instruction]

    @model_validator(mode="after")
    def check_control_flow(self):
        for pc, instr in self.instructions.items():
            if pc != instr.pc:
                raise ValueError(f"instruction keyed at {pc} declares pc {instr.pc}")
        if 0 not in self.instructions:
            raise ValueError("program has no entry instruction at pc 0")
        for pc in sorted(self.instructions):
            instr = self.instructions[pc]
            if isinstance(instr.opcode, If1) and instr.opcode.target not in self.instructions:
                raise InvalidTarget(instr.opcode.target)
            if not isinstance(instr.opcode, Return) and instr.next_pc not in self.instructions:
                raise InvalidTarget(instr.next_pc)
        return self

    @classmethod
    def from_instructions(cls, instructions: list[Instruction]) -> Program:
        return cls(instructions={instr.pc: instr for instr in instructions})

    def __getitem__(self, pc: int) -> Instruction:
        try:
            return self.instructions[pc]
        except KeyError:
            raise InvalidTarget(pc) from None

    def __contains__(self, pc: object) -> bool:
        return pc in self.instructions

    def __len__(self) -> int:
        return len(self.instructions)

    def ordered(self) -> list[Instruction]:
        return [self.instructions[pc] for pc in sorted(self.instructions)]


def render_value(value: Any) -> str:
    return str(value)


@dataclass(frozen=True)
class MachineEnv:
    """Operand stack (index 0 is the top) plus local variables."""

    stack: tuple = ()
    locals: tuple = ()

    def push(self, value: Any) -> MachineEnv:
        return MachineEnv((value,) + self.stack, self.locals)

    def pop(self) -> tuple[Any, MachineEnv]:
        if not self.stack:
            raise StackUnderflow(self)
        return self.stack[0], MachineEnv(self.stack[1:], self.locals)

    def top(self) -> Any:
        if not self.stack:
            raise StackUnderflow(self)
        return self.stack[0]

    def __str__(self) -> str:
        stack = ",".join(render_value(v) for v in self.stack)
        local_values = ",".join(render_value(v) for v in self.locals)
        return f"env([{stack}],[{local_values}])"


@dataclass(frozen=True)
class TraceEntry:
    pc: int
    env: MachineEnv
    opcode: Any

    def __str__(self) -> str:
        return f"> {self.pc}  {self.env}  --> {self.opcode}"


@dataclass(frozen=True)
class Successor:
    pc: int
    env: MachineEnv


@dataclass(frozen=True)
class Halt:
    env: MachineEnv


@dataclass(frozen=True)
class RunResult:
    env: MachineEnv
    trace: tuple[TraceEntry, ...]

    @property
    def pcs(self) -> list[int]:
        return [entry.pc for entry in self.trace]
