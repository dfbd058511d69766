"""Goals understood by the suspension engine, and the outcomes of solving them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from app.models.term import Substitution, Term, render_term


@dataclass(frozen=True)
class UnifyGoal:
    t1: Term
    t2: Term

    def terms(self) -> tuple[Term, ...]:
        return (self.t1, self.t2)

    def map_terms(self, f: Callable[[Term], Term]) -> UnifyGoal:
        return UnifyGoal(f(self.t1), f(self.t2))

    def __str__(self) -> str:
        return f"{render_term(self.t1)} = {render_term(self.t2)}"


@dataclass(frozen=True)
class PlusGoal:
    """x + y = z over integers, run once two of the three are known."""

    x: Term
    y: Term
    z: Term

    def terms(self) -> tuple[Term, ...]:
        return (self.x, self.y, self.z)

    def map_terms(self, f: Callable[[Term], Term]) -> PlusGoal:
        return PlusGoal(f(self.x), f(self.y), f(self.z))

    def __str__(self) -> str:
        return f"plus({render_term(self.x)},{render_term(self.y)},{render_term(self.z)})"


@dataclass(frozen=True)
class NatGoal:
    """Peano numeral membership: 0, s(0), s(s(0)), ..."""

    t: Term

    def terms(self) -> tuple[Term, ...]:
        return (self.t,)

    def map_terms(self, f: Callable[[Term], Term]) -> NatGoal:
        return NatGoal(f(self.t))

    def __str__(self) -> str:
        return f"nat({render_term(self.t)})"


@dataclass(frozen=True)
class SafeNot:
    inner: Goal

    def terms(self) -> tuple[Term, ...]:
        return self.inner.terms()

    def map_terms(self, f: Callable[[Term], Term]) -> SafeNot:
        return SafeNot(self.inner.map_terms(f))

    def __str__(self) -> str:
        return f"safe_not({self.inner})"


Goal = Union[UnifyGoal, PlusGoal, NatGoal, SafeNot]


@dataclass(frozen=True)
class Success:
    subst: Substitution


@dataclass(frozen=True)
class Floundered:
    subst: Substitution
    suspended: tuple[Goal, ...]


SolveOutcome = Union[Success, Floundered]


@dataclass(frozen=True)
class GoalStore:
    """Solver state: goals still to run, goals waiting on their wake condition, bindings so far."""

    active: tuple[Goal, ...]
    suspended: tuple[Goal, ...]
    subst: Substitution
