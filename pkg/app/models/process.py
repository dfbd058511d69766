"""Process terms: stop, action prefix and interleaving."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Stop:
    def __str__(self) -> str:
        return render_process(self)


@dataclass(frozen=True)
class Prefix:
    action: str
    cont: Process

    def __str__(self) -> str:
        return render_process(self)


@dataclass(frozen=True)
class Interleave:
    left: Process
    right: Process

    def __str__(self) -> str:
        return render_process(self)


Process = Union[Stop, Prefix, Interleave]

STOP = Stop()


def render_process(p: Process, as_argument: bool = False) -> str:
    """Quoted-write form: `'||'(stop,(b->stop))`; a prefix is parenthesised as an argument."""
    if isinstance(p, Stop):
        return "stop"
    if isinstance(p, Prefix):
        text = f"{p.action}->{render_process(p.cont)}"
        return f"({text})" if as_argument else text
    return f"'||'({render_process(p.left, True)},{render_process(p.right, True)})"


def remaining_actions(p: Process) -> int:
    """Number of prefix actions still to be performed; the best-first heuristic."""
    if isinstance(p, Stop):
        return 0
    if isinstance(p, Prefix):
        return 1 + remaining_actions(p.cont)
    return remaining_actions(p.left) + remaining_actions(p.right)


def mirror(p: Process) -> Process:
    if isinstance(p, Interleave):
        return Interleave(mirror(p.right), mirror(p.left))
    if isinstance(p, Prefix):
        return Prefix(p.action, mirror(p.cont))
    return p
