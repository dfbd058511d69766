"""Tests for the bytecode models and the interpreter."""

import itertools

import pytest
from pydantic import ValidationError

from app.exceptions import DomainMismatch, InvalidTarget, StackUnderflow
from app.models.bytecode import Dup, IConst, If1, Instruction, IOp, MachineEnv, Program, Return, Successor
from app.models.enums import ArithOp, CmpOp, Sign
from app.services.domains import CONCRETE, SIGN
from app.services.interpreter import run, step
from tests.conftest import golden


def program(*instructions):
    return Program.from_instructions(list(instructions))


class TestProgramValidation:
    """Tests for the Program and Instruction models."""

    def test_missing_entry(self):
        with pytest.raises(ValueError):
            program(Instruction(pc=1, opcode=Return(), size=0))

    def test_dangling_jump(self):
        with pytest.raises(InvalidTarget):
            program(
                Instruction(pc=0, opcode=If1(cmp=CmpOp.gt, const=0, target=7), size=1),
                Instruction(pc=1, opcode=Return(), size=0),
            )

    def test_dangling_fall_through(self):
        with pytest.raises(InvalidTarget):
            program(Instruction(pc=0, opcode=Dup(), size=2), Instruction(pc=1, opcode=Return(), size=0))

    def test_zero_size_only_for_return(self):
        with pytest.raises(ValidationError):
            Instruction(pc=0, opcode=Dup(), size=0)

    def test_negative_pc(self):
        with pytest.raises(ValidationError):
            Instruction(pc=-1, opcode=Return(), size=0)

    def test_lookup_unknown_pc(self, countdown):
        with pytest.raises(InvalidTarget):
            countdown[7]

    def test_opcode_rendering(self):
        assert str(IConst(value=-1)) == "iconst(-1)"
        assert str(IConst(value=Sign.pos)) == "iconst(pos)"
        assert str(IOp(op=ArithOp.mul)) == "iop(*)"
        assert str(If1(cmp=CmpOp.gt, const=0, target=3)) == "if1(>,0,3)"


class TestMachineEnv:
    """Tests for the machine environment."""

    def test_push_pop(self):
        env = MachineEnv().push(1).push(2)
        assert str(env) == "env([2,1],[])"
        value, rest = env.pop()
        assert value == 2 and rest.stack == (1,)

    def test_pop_empty(self):
        with pytest.raises(StackUnderflow) as exc:
            MachineEnv().pop()
        assert str(exc.value) == "*** Could not pop from stack: env([],[])"


class TestStep:
    """Tests for single-instruction execution."""

    def test_iop_order(self):
        prog = program(Instruction(pc=0, opcode=IOp(op=ArithOp.sub), size=1), Instruction(pc=1, opcode=Return(), size=0))
        # top of stack is the first operand
        (outcome,) = step(prog, 0, MachineEnv((5, 2)), CONCRETE)
        assert outcome == Successor(1, MachineEnv((3,)))

    def test_abstract_branch_false_first(self, countdown_abs):
        outcomes = list(step(countdown_abs, 6, MachineEnv((Sign.top, Sign.top)), SIGN))
        assert [o.pc for o in outcomes] == [9, 3]

    def test_iop_on_empty_stack(self):
        prog = program(Instruction(pc=0, opcode=IOp(op=ArithOp.add), size=1), Instruction(pc=1, opcode=Return(), size=0))
        with pytest.raises(StackUnderflow):
            list(step(prog, 0, MachineEnv(), CONCRETE))

    def test_concrete_branch_deterministic(self, countdown):
        outcomes = list(step(countdown, 6, MachineEnv((3, 3)), CONCRETE))
        assert [o.pc for o in outcomes] == [3]


class TestRun:
    """Tests for whole-program runs."""

    def test_concrete_trace(self, countdown):
        results = list(run(countdown, 0, MachineEnv(), CONCRETE))
        assert len(results) == 1
        result = results[0]
        assert str(result.env) == "env([0],[])"
        assert result.pcs == [0, 1, 2, 3, 4, 5, 6] + [3, 4, 5, 6] * 3 + [9]
        expected = golden("run_countdown.txt").splitlines()[:-1]
        assert [str(e) for e in result.trace] == expected

    def test_sign_constant_in_concrete_domain(self, countdown_abs):
        with pytest.raises(DomainMismatch):
            next(run(countdown_abs, 0, MachineEnv(), CONCRETE))

    def test_underflow_fails_path(self):
        prog = program(Instruction(pc=0, opcode=Dup(), size=1), Instruction(pc=1, opcode=Return(), size=0))
        failures = []
        assert list(run(prog, 0, MachineEnv(), CONCRETE, on_failure=failures.append)) == []
        assert len(failures) == 1

    def test_abstract_paths_are_lazy(self, countdown_abs):
        paths = run(countdown_abs, 0, MachineEnv(), SIGN)
        first = [next(paths) for _ in range(5)]
        assert [len(r.trace) for r in first] == [8, 12, 16, 20, 24]
        assert all(str(r.env) == "env([top],[])" for r in first)


class TestPathInvariants:
    """Control-flow and stack-shape invariants over the first abstract paths."""

    PATHS = 12

    def successors(self, program, pc):
        instr = program[pc]
        allowed = {instr.next_pc}
        if isinstance(instr.opcode, If1):
            allowed.add(instr.opcode.target)
        return allowed

    @pytest.mark.parametrize("name, domain", [("countdown", CONCRETE), ("countdown_abs", SIGN)])
    def test_next_pc_follows_size_or_jump(self, request, name, domain):
        prog = request.getfixturevalue(name)
        for result in itertools.islice(run(prog, 0, MachineEnv(), domain), self.PATHS):
            for entry, following in zip(result.trace, result.trace[1:]):
                assert following.pc in self.successors(prog, entry.pc)

    @pytest.mark.parametrize("name, domain", [("countdown", CONCRETE), ("countdown_abs", SIGN)])
    def test_stack_height_depends_only_on_pc(self, request, name, domain):
        prog = request.getfixturevalue(name)
        heights = {}
        for result in itertools.islice(run(prog, 0, MachineEnv(), domain), self.PATHS):
            for entry in result.trace:
                assert heights.setdefault(entry.pc, len(entry.env.stack)) == len(entry.env.stack)
        assert heights == {0: 0, 1: 1, 2: 2, 3: 1, 4: 2, 5: 1, 6: 2, 9: 1}
