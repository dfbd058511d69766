"""Look up instructions by unifying a pattern with `instr(PC,Opcode,Size)` facts."""

from typing import Iterator, Optional

from app.models.bytecode import IConst, If1, Instruction, IOp, Program
from app.models.enums import Sign
from app.models.term import Atom, Compound, Int, Substitution, Term
from app.services.unification import unify


def _const_term(value) -> Term:
    if isinstance(value, Sign):
        return Int(0) if value is Sign.zero else Atom(value.value)
    return Int(value)


def opcode_term(opcode) -> Term:
    if isinstance(opcode, IConst):
        return Compound("iconst", (_const_term(opcode.value),))
    if isinstance(opcode, IOp):
        return Compound("iop", (Atom(opcode.op.value),))
    if isinstance(opcode, If1):
        return Compound("if1", (Atom(opcode.cmp.value), _const_term(opcode.const), Int(opcode.target)))
    return Atom(str(opcode))


def instruction_term(instr: Instruction) -> Term:
    return Compound("instr", (Int(instr.pc), opcode_term(instr.opcode), Int(instr.size)))


def query_instructions(
    program: Program, pattern: Term, s: Optional[Substitution] = None
) -> Iterator[Substitution]:
    """Each way `pattern` unifies with an instruction fact, in ascending pc order."""
    s = s if s is not None else Substitution.empty()
    for instr in program.ordered():
        unified = unify(pattern, instruction_term(instr), s)
        if unified is not None:
            yield unified
