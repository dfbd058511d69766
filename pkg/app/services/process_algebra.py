"""
Labelled transitions of process terms, trace enumeration and memoized
state-space exploration.

Exploration keeps a visited table keyed on structural equality, so each
distinct state is expanded once; the frontier order is the chosen search
strategy (breadth-first, depth-first, or best-first on a heuristic).
"""

import heapq
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from tqdm import tqdm

from app.models.enums import SearchStrategy
from app.models.process import Interleave, Prefix, Process, remaining_actions
from app.services.streams import bind, unit

logger = logging.getLogger(__name__)

Step = tuple[str, Process]


def transitions(p: Process) -> Iterator[Step]:
    """Every (action, successor) of `p`: left operand moves first, then the right."""
    if isinstance(p, Prefix):
        yield p.action, p.cont
    elif isinstance(p, Interleave):
        for action, left in transitions(p.left):
            yield action, Interleave(left, p.right)
        for action, right in transitions(p.right):
            yield action, Interleave(p.left, right)


def runs(p: Process, n: int) -> Iterator[tuple[tuple[str, ...], Process]]:
    """Action sequences of length exactly `n` together with the process reached."""
    if n < 0:
        raise ValueError("trace length must be non-negative")
    if n == 0:
        return unit(((), p))
    return bind(
        transitions(p),
        lambda move: (((move[0],) + actions, final) for actions, final in runs(move[1], n - 1)),
    )


def traces(p: Process, n: int) -> Iterator[tuple[str, ...]]:
    return (actions for actions, _ in runs(p, n))


@dataclass
class ReachabilityReport:
    states: list[Process] = field(default_factory=list)
    deadlocks: list[Process] = field(default_factory=list)
    edges: list[tuple[Process, str, Process]] = field(default_factory=list)
    expansions: int = 0
    parents: dict = field(default_factory=dict, repr=False)

    @property
    def state_set(self) -> frozenset:
        return frozenset(self.states)

    def trace_to(self, state: Process) -> list[str]:
        """Actions leading from the initial process to `state` along the exploration tree."""
        actions = []
        while self.parents.get(state) is not None:
            state, action = self.parents[state]
            actions.append(action)
        return list(reversed(actions))


class _Frontier:
    def __init__(self, strategy: SearchStrategy):
        self.strategy = SearchStrategy(strategy)
        self._items: deque = deque()
        self._heap: list = []
        self._order = itertools.count()

    def push(self, state: Process) -> None:
        if self.strategy is SearchStrategy.best_first:
            heapq.heappush(self._heap, (remaining_actions(state), next(self._order), state))
        else:
            self._items.append(state)

    def pop(self) -> Process:
        if self.strategy is SearchStrategy.best_first:
            return heapq.heappop(self._heap)[2]
        if self.strategy is SearchStrategy.dfs:
            return self._items.pop()
        return self._items.popleft()

    def __bool__(self) -> bool:
        return bool(self._heap or self._items)


def _explore(
    p: Process,
    strategy: SearchStrategy,
    successors: Callable[[Process], Iterator[Step]],
    report: ReachabilityReport,
    show_progress: bool,
) -> Iterator[tuple[Process, list[Step]]]:
    frontier = _Frontier(strategy)
    report.states.append(p)
    report.parents[p] = None
    frontier.push(p)
    with tqdm(desc="Exploring states", unit="state", disable=not show_progress) as progress:
        while frontier:
            state = frontier.pop()
            moves = list(successors(state))
            report.expansions += 1
            progress.update(1)
            fresh = []
            for action, target in moves:
                report.edges.append((state, action, target))
                if target not in report.parents:
                    report.parents[target] = (state, action)
                    report.states.append(target)
                    fresh.append(target)
            # depth-first pops from the end: push in reverse to expand the first move first
            for target in (reversed(fresh) if frontier.strategy is SearchStrategy.dfs else fresh):
                frontier.push(target)
            if not moves:
                report.deadlocks.append(state)
            yield state, moves


def reachable(
    p: Process,
    strategy: SearchStrategy = SearchStrategy.bfs,
    successors: Callable[[Process], Iterator[Step]] = transitions,
    show_progress: bool = False,
) -> ReachabilityReport:
    """
    Explore every process reachable from `p`.

    Args:
        p: Initial process
        strategy: Frontier order; the resulting state set does not depend on it
        successors: Transition function (injectable so callers can count expansions)
        show_progress: Show a tqdm progress bar on stderr

    Returns:
        ReachabilityReport with states in discovery order and the deadlocks
    """
    report = ReachabilityReport()
    for _ in _explore(p, strategy, successors, report, show_progress):
        pass
    logger.info(
        "explored %s states, %s deadlocks, %s expansions",
        len(report.states), len(report.deadlocks), report.expansions,
    )
    return report


def find_deadlock(
    p: Process,
    strategy: SearchStrategy = SearchStrategy.bfs,
    successors: Callable[[Process], Iterator[Step]] = transitions,
) -> Optional[list[str]]:
    """Action trace to the first deadlock met in `strategy` order, or None."""
    report = ReachabilityReport()
    for state, moves in _explore(p, strategy, successors, report, False):
        if not moves:
            return report.trace_to(state)
    return None
