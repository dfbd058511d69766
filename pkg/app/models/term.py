"""
Logic terms and substitutions.

Terms are immutable values. A Substitution is persistent: `extend` returns a
new substitution and leaves the receiver untouched, so a search can back up
simply by dropping the newer value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Union


@dataclass(frozen=True)
class Var:
    id: int
    # Source name, for display only; identity is the id.
    name: Optional[str] = field(default=None, compare=False)

    def __str__(self) -> str:
        return self.name if self.name else f"_{self.id}"


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Int:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Compound:
    functor: str
    args: tuple[Term, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        return render_term(self)


Term = Union[Var, Atom, Int, Compound]

NIL = Atom("[]")
LIST_FUNCTOR = "."


def make_list(items: list[Term], tail: Term = NIL) -> Term:
    result = tail
    for item in reversed(items):
        result = Compound(LIST_FUNCTOR, (item, result))
    return result


def list_items(term: Term) -> Optional[list[Term]]:
    """Elements of a proper list term, or None if `term` is not one."""
    items = []
    while isinstance(term, Compound) and term.functor == LIST_FUNCTOR and term.arity == 2:
        items.append(term.args[0])
        term = term.args[1]
    return items if term == NIL else None


class VarContext:
    """Fresh-variable allocator owned by one evaluation."""

    def __init__(self, start: int = 0):
        self._ids = itertools.count(start)

    def fresh(self, name: Optional[str] = None) -> Var:
        return Var(next(self._ids), name)


class Substitution:
    """Triangular binding store from variable ids to terms."""

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Optional[Mapping[int, Term]] = None):
        self._bindings: dict[int, Term] = dict(bindings or {})

    @classmethod
    def empty(cls) -> Substitution:
        return cls()

    def extend(self, var: Var, term: Term) -> Substitution:
        bindings = dict(self._bindings)
        bindings[var.id] = term
        return Substitution(bindings)

    def lookup(self, var: Var) -> Optional[Term]:
        return self._bindings.get(var.id)

    def walk(self, term: Term) -> Term:
        """Follow variable bindings at the top of `term` only."""
        while isinstance(term, Var) and term.id in self._bindings:
            term = self._bindings[term.id]
        return term

    def items(self) -> Iterator[tuple[int, Term]]:
        return iter(self._bindings.items())

    def __contains__(self, var: object) -> bool:
        return isinstance(var, Var) and var.id in self._bindings

    def __len__(self) -> int:
        return len(self._bindings)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Substitution) and self._bindings == other._bindings

    def __hash__(self) -> int:
        return hash(frozenset(self._bindings.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"_{k}↦{render_term(v)}" for k, v in sorted(self._bindings.items()))
        return f"Substitution({{{inner}}})"


def term_vars(term: Term) -> list[Var]:
    """Variables of `term` in first-occurrence order."""
    seen: dict[int, Var] = {}
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            seen.setdefault(t.id, t)
        elif isinstance(t, Compound):
            stack.extend(reversed(t.args))
    return list(seen.values())


def render_term(term: Term, names: Optional[Mapping[int, str]] = None) -> str:
    """Prolog `write` style rendering; `names` overrides variable display."""
    parts: list[str] = []
    stack: list[tuple[Term, bool]] = [(term, False)]
    while stack:
        node, done = stack.pop()
        if isinstance(node, Var):
            parts.append(names[node.id] if names is not None and node.id in names else str(node))
            continue
        if isinstance(node, (Atom, Int)):
            parts.append(str(node))
            continue
        items = list_items(node)
        children = items if items is not None else list(node.args)
        if not done:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(children))
            continue
        start = len(parts) - len(children)
        inner = ",".join(parts[start:])
        del parts[start:]
        parts.append(f"[{inner}]" if items is not None else f"{node.functor}({inner})")
    return parts[0]


def canonical_names(terms: list[Term]) -> dict[int, str]:
    """Number the unbound variables `_1`, `_2`, ... in first-occurrence order."""
    names: dict[int, str] = {}
    for term in terms:
        for var in term_vars(term):
            if var.id not in names:
                names[var.id] = f"_{len(names) + 1}"
    return names
