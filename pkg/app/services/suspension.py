"""
Coroutining goal solver.

A goal whose wake condition does not hold yet is suspended; after every
goal that may have bound variables, the suspended goals are re-examined and
the ones that became runnable are executed before the remaining active
goals. When only suspended goals are left the branch is reported as
floundered rather than as a success or a failure.
"""

import itertools
import logging
from typing import Iterable, Iterator, Optional

from app.models.goals import (
    Floundered,
    Goal,
    GoalStore,
    NatGoal,
    PlusGoal,
    SafeNot,
    SolveOutcome,
    Success,
    UnifyGoal,
)
from app.models.term import Compound, Int, Substitution, Term, Var
from app.services.streams import fail, unit
from app.services.unification import is_ground, resolve, unify

logger = logging.getLogger(__name__)

ZERO = Int(0)


def peano(n: int) -> Term:
    term: Term = ZERO
    for _ in range(n):
        term = Compound("s", (term,))
    return term


def is_ready(goal: Goal, s: Substitution) -> bool:
    """Wake condition of `goal` under `s`."""
    if isinstance(goal, PlusGoal):
        return sum(is_ground(t, s) for t in goal.terms()) >= 2
    if isinstance(goal, SafeNot):
        return all(is_ground(t, s) for t in goal.terms())
    return True


def _unified(t1: Term, t2: Term, s: Substitution) -> Iterator[Substitution]:
    result = unify(t1, t2, s)
    return unit(result) if result is not None else fail()


def _plus(goal: PlusGoal, s: Substitution) -> Iterator[Substitution]:
    x, y, z = (resolve(t, s) for t in goal.terms())
    known = [t for t in (x, y, z) if not isinstance(t, Var)]
    if any(not isinstance(t, Int) for t in known):
        return fail()
    if isinstance(x, Var):
        return _unified(x, Int(z.value - y.value), s)
    if isinstance(y, Var):
        return _unified(y, Int(z.value - x.value), s)
    return _unified(z, Int(x.value + y.value), s)


def _nat(t: Term, s: Substitution) -> Iterator[Substitution]:
    t = s.walk(t)
    while isinstance(t, Compound) and t.functor == "s" and t.arity == 1:
        t = s.walk(t.args[0])
    if t == ZERO:
        return unit(s)
    if isinstance(t, Var):
        return (s.extend(t, peano(n)) for n in itertools.count())
    return fail()


def _execute(goal: Goal, s: Substitution) -> Iterator[Substitution]:
    if isinstance(goal, UnifyGoal):
        return _unified(goal.t1, goal.t2, s)
    if isinstance(goal, PlusGoal):
        return _plus(goal, s)
    if isinstance(goal, NatGoal):
        return _nat(goal.t, s)
    if isinstance(goal, SafeNot):
        # ground by now: an existence test on the inner goal
        found = next(_solve(GoalStore((goal.inner,), (), s)), None)
        return fail() if isinstance(found, Success) else unit(s)
    raise TypeError(f"not a goal: {goal!r}")


def _solve(store: GoalStore) -> Iterator[SolveOutcome]:
    s = store.subst
    if not store.active:
        if store.suspended:
            logger.debug("floundered with %s suspended goals", len(store.suspended))
            yield Floundered(s, store.suspended)
        else:
            yield Success(s)
        return
    goal, rest = store.active[0], store.active[1:]
    if not is_ready(goal, s):
        yield from _solve(GoalStore(rest, store.suspended + (goal,), s))
        return
    for s1 in _execute(goal, s):
        woken = tuple(g for g in store.suspended if is_ready(g, s1))
        if woken:
            logger.debug("woke %s", ", ".join(str(g) for g in woken))
        still = tuple(g for g in store.suspended if not is_ready(g, s1))
        yield from _solve(GoalStore(woken + rest, still, s1))


def solve(goals: Iterable[Goal], s: Optional[Substitution] = None) -> Iterator[SolveOutcome]:
    """
    Solve a conjunction of goals, depth-first in goal order.

    Args:
        goals: Conjunction to solve, left to right
        s: Initial bindings (empty by default)

    Returns:
        Stream of Success / Floundered outcomes
    """
    return _solve(GoalStore(tuple(goals), (), s if s is not None else Substitution.empty()))


def instantiation_orders(goals: Iterable[Goal]) -> Iterator[tuple[Goal, ...]]:
    """Every ordering of a goal list, for checking that answers do not depend on it."""
    return itertools.permutations(tuple(goals))


def resolve_goal(goal: Goal, s: Substitution) -> Goal:
    return goal.map_terms(lambda t: resolve(t, s))
