"""
Reader for bytecode files: one `instr(<pc>,<opcode>,<size>).` fact per line,
blank lines and `%` comment lines ignored.
"""

from pathlib import Path
from typing import Union

from pydantic import ValidationError

from app.exceptions import ParseError
from app.models.bytecode import DomainConst, Dup, IConst, If1, Instruction, IOp, Program, Return
from app.models.enums import ArithOp, CmpOp, Sign
from app.models.term import Atom, Compound, Int, Term
from app.utils.term_parser import TermParser


def _const(term: Term, line: int) -> DomainConst:
    if isinstance(term, Int):
        return term.value
    if isinstance(term, Atom) and term.name in {s.value for s in Sign}:
        return Sign(term.name)
    raise ParseError(line, f"bad constant {term}")


def _int(term: Term, line: int, what: str) -> int:
    if not isinstance(term, Int):
        raise ParseError(line, f"{what} must be an integer, got {term}")
    return term.value


def parse_opcode(term: Term, line: int = 1):
    if isinstance(term, Atom):
        if term.name == "dup":
            return Dup()
        if term.name == "return":
            return Return()
    elif isinstance(term, Compound):
        name, args = term.functor, term.args
        if name == "iconst" and len(args) == 1:
            return IConst(value=_const(args[0], line))
        if name == "iop" and len(args) == 1 and isinstance(args[0], Atom):
            try:
                return IOp(op=ArithOp(args[0].name))
            except ValueError:
                raise ParseError(line, f"unknown operator {args[0]}") from None
        if name == "if1" and len(args) == 3 and isinstance(args[0], Atom):
            try:
                cmp = CmpOp(args[0].name)
            except ValueError:
                raise ParseError(line, f"unknown comparison {args[0]}") from None
            return If1(cmp=cmp, const=_const(args[1], line), target=_int(args[2], line, "jump target"))
    raise ParseError(line, f"unknown opcode {term}")


def parse_instruction(text: str, line: int = 1) -> Instruction:
    parser = TermParser(text, line)
    fact = parser.parse_term()
    parser.expect("sym", ".")
    parser.expect_end()
    if not (isinstance(fact, Compound) and fact.functor == "instr" and fact.arity == 3):
        raise ParseError(line, f"expected instr(PC,Opcode,Size), got {fact}")
    pc_term, opcode_term, size_term = fact.args
    try:
        return Instruction(
            pc=_int(pc_term, line, "pc"),
            opcode=parse_opcode(opcode_term, line),
            size=_int(size_term, line, "size"),
        )
    except ValidationError as e:
        raise ParseError(line, e.errors()[0]["msg"]) from None


def parse_program(text: str) -> Program:
    """
    Parse a bytecode listing into a validated Program.

    Args:
        text: File contents

    Returns:
        Program whose entry instruction, jump targets and fall-throughs exist

    Raises:
        ParseError: malformed line, duplicate pc, or no instructions
        InvalidTarget: a jump target or fall-through pc has no instruction
    """
    instructions: dict[int, Instruction] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        instr = parse_instruction(stripped, number)
        if instr.pc in instructions:
            raise ParseError(number, f"duplicate pc {instr.pc}")
        instructions[instr.pc] = instr
    if not instructions:
        raise ParseError(1, "no instructions")
    try:
        return Program(instructions=instructions)
    except ValidationError as e:
        raise ParseError(1, e.errors()[0]["msg"]) from None


def load_program(path: Union[str, Path]) -> Program:
    return parse_program(Path(path).read_text(encoding="utf-8"))
