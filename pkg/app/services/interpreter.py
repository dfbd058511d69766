"""
Bytecode interpreter, generic over a value domain.

`step` executes one instruction and yields its successor states; `run` is
the depth-first closure of `step`. With the concrete domain every state has
exactly one successor; with the sign domain a conditional may yield both,
false branch first.
"""

import logging
from typing import Callable, Iterator, Optional, Union

from app.exceptions import StackUnderflow
from app.models.bytecode import (
    Dup,
    Halt,
    IConst,
    If1,
    IOp,
    MachineEnv,
    Program,
    Return,
    RunResult,
    Successor,
    TraceEntry,
)
from app.services.domains import ValueDomain

logger = logging.getLogger(__name__)

Outcome = Union[Successor, Halt]


def step(program: Program, pc: int, env: MachineEnv, domain: ValueDomain) -> Iterator[Outcome]:
    """
    Execute the instruction at `pc`.

    Args:
        program: Instruction database
        pc: Program counter of the instruction to execute
        env: Environment before the instruction
        domain: Value domain giving meaning to constants, arithmetic and tests

    Returns:
        Stream of successor states, or a single Halt for `return`
    """
    instr = program[pc]
    opcode = instr.opcode
    if isinstance(opcode, IConst):
        yield Successor(instr.next_pc, env.push(domain.inject_const(opcode.value)))
    elif isinstance(opcode, Dup):
        yield Successor(instr.next_pc, env.push(env.top()))
    elif isinstance(opcode, IOp):
        v1, env1 = env.pop()
        v2, env2 = env1.pop()
        for result in domain.ex_op(opcode.op, v1, v2):
            yield Successor(instr.next_pc, env2.push(result))
    elif isinstance(opcode, If1):
        value, rest = env.pop()
        const = domain.inject_const(opcode.const)
        if domain.cmp_false(opcode.cmp, value, const):
            yield Successor(instr.next_pc, rest)
        if domain.cmp_true(opcode.cmp, value, const):
            yield Successor(opcode.target, rest)
    elif isinstance(opcode, Return):
        yield Halt(env)


def _log_underflow(exc: StackUnderflow) -> None:
    logger.warning(str(exc))


def _materialize(trace) -> tuple[TraceEntry, ...]:
    entries = []
    while trace is not None:
        entry, trace = trace
        entries.append(entry)
    return tuple(reversed(entries))


def run(
    program: Program,
    pc0: int,
    env0: MachineEnv,
    domain: ValueDomain,
    on_failure: Optional[Callable[[StackUnderflow], None]] = None,
) -> Iterator[RunResult]:
    """
    Enumerate every complete path from (`pc0`, `env0`), depth-first.

    A path that underflows the stack fails; `on_failure` (by default a
    warning log line) is told about it and enumeration continues with the
    next alternative.
    """
    report = on_failure or _log_underflow
    # Each frame is a stream of (pc, env, trace) nodes; traces are linked
    # (entry, parent) pairs so sibling paths share their prefix.
    frames: list[Iterator] = [iter([(pc0, env0, None)])]
    while frames:
        try:
            node = next(frames[-1], None)
        except StackUnderflow as exc:
            frames.pop()
            report(exc)
            continue
        if node is None:
            frames.pop()
            continue
        pc, env, trace = node
        entry = TraceEntry(pc, env, program[pc].opcode)
        logger.debug(str(entry))
        trace = (entry, trace)
        if isinstance(program[pc].opcode, Return):
            yield RunResult(env, _materialize(trace))
            continue
        frames.append(_children(step(program, pc, env, domain), trace))


def _children(outcomes: Iterator[Outcome], trace) -> Iterator:
    for outcome in outcomes:
        yield outcome.pc, outcome.env, trace
