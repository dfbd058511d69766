"""
Sign analysis of bytecode programs.

Two modes: `enumerate_paths` lists individual abstract paths (there may be
infinitely many), `analyze_fixpoint` joins all environments reaching each
program point and always terminates.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from app.exceptions import JoinShapeMismatch
from app.models.bytecode import Halt, MachineEnv, Program, RunResult
from app.services.domains import SIGN, SignDomain
from app.services.interpreter import run, step
from app.services.streams import take

logger = logging.getLogger(__name__)


@dataclass
class AbstractState:
    """Joined environment per program point."""

    per_pc: dict[int, MachineEnv] = field(default_factory=dict)
    iterations: int = 0

    def report_lines(self) -> list[str]:
        return [f"{pc}: {self.per_pc[pc]}" for pc in sorted(self.per_pc)]


def join_env(pc: int, left: MachineEnv, right: MachineEnv, domain: SignDomain = SIGN) -> MachineEnv:
    if len(left.stack) != len(right.stack) or len(left.locals) != len(right.locals):
        raise JoinShapeMismatch(pc, left, right)
    return MachineEnv(
        tuple(domain.join(a, b) for a, b in zip(left.stack, right.stack)),
        tuple(domain.join(a, b) for a, b in zip(left.locals, right.locals)),
    )


def env_leq(left: MachineEnv, right: MachineEnv, domain: SignDomain = SIGN) -> bool:
    """Pointwise lattice order; environments of different shape are unordered."""
    if len(left.stack) != len(right.stack) or len(left.locals) != len(right.locals):
        return False
    pairs = list(zip(left.stack, right.stack)) + list(zip(left.locals, right.locals))
    return all(domain.leq(a, b) for a, b in pairs)


def enumerate_paths(program: Program, env0: MachineEnv, limit: int, pc0: int = 0) -> list[RunResult]:
    if limit <= 0:
        raise ValueError("limit must be positive")
    return take(limit, run(program, pc0, env0, SIGN))


def analyze_fixpoint(
    program: Program,
    pc0: int = 0,
    env0: Optional[MachineEnv] = None,
    domain: SignDomain = SIGN,
    lifo: bool = False,
) -> AbstractState:
    """
    Worklist fixpoint over program points.

    Args:
        program: Abstract bytecode program
        pc0: Entry program counter
        env0: Entry environment (empty by default)
        domain: Sign domain used for transfer and join
        lifo: Take the newest worklist entry first; the result does not depend on it

    Returns:
        AbstractState mapping each reachable pc to the join of every
        environment that reaches it
    """
    env0 = env0 if env0 is not None else MachineEnv()
    state = AbstractState(per_pc={pc0: env0})
    worklist = deque([pc0])
    queued = {pc0}
    while worklist:
        pc = worklist.pop() if lifo else worklist.popleft()
        queued.discard(pc)
        state.iterations += 1
        for outcome in step(program, pc, state.per_pc[pc], domain):
            if isinstance(outcome, Halt):
                continue
            target = outcome.pc
            old = state.per_pc.get(target)
            new = outcome.env if old is None else join_env(target, old, outcome.env, domain)
            if new == old:
                continue
            logger.debug("pc %s grows to %s", target, new)
            state.per_pc[target] = new
            if target not in queued:
                worklist.append(target)
                queued.add(target)
    logger.debug("fixpoint reached after %s iterations", state.iterations)
    return state
