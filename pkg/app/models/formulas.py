"""
Abstract syntax of the object languages: the set/integer expression
language that gets type-checked, and propositional formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from app.models.term import Term, render_term


# ---- set / integer expressions ----

@dataclass(frozen=True)
class EmptySet:
    def __str__(self) -> str:
        return "[]"


@dataclass(frozen=True)
class Num:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Ident:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SetLit:
    elems: tuple[Expr, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elems", tuple(self.elems))
        if not self.elems:
            raise ValueError("a set literal needs at least one element; use EmptySet")

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.elems) + "]"


@dataclass(frozen=True)
class BinaryExpr:
    a: Expr
    b: Expr
    functor = ""

    def __str__(self) -> str:
        return f"{self.functor}({self.a},{self.b})"


class SetUnion(BinaryExpr):
    functor = "union"


class Intersect(BinaryExpr):
    functor = "intersect"


class Plus(BinaryExpr):
    functor = "plus"


class InSet(BinaryExpr):
    functor = "in_set"


class Gt(BinaryExpr):
    functor = "gt"


class And(BinaryExpr):
    functor = "and"


class Eq(BinaryExpr):
    functor = "eq"


Expr = Union[EmptySet, Num, Ident, SetLit, BinaryExpr]

BINARY_EXPRS: dict[str, type[BinaryExpr]] = {
    cls.functor: cls for cls in (SetUnion, Intersect, Plus, InSet, Gt, And, Eq)
}


def expr_size(expr: Expr) -> int:
    """Number of nodes the type checker visits; a set literal counts one cell per element plus its `[]` tail."""
    if isinstance(expr, SetLit):
        return sum(expr_size(e) for e in expr.elems) + len(expr.elems) + 1
    if isinstance(expr, BinaryExpr):
        return 1 + expr_size(expr.a) + expr_size(expr.b)
    return 1


# ---- propositional formulas ----

@dataclass(frozen=True)
class Const:
    """Truth constant; the term is the atom true/false or a variable."""

    term: Term

    def __str__(self) -> str:
        return f"const({render_term(self.term)})"


@dataclass(frozen=True)
class PAnd:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return f"and({self.left},{self.right})"


@dataclass(frozen=True)
class POr:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return f"or({self.left},{self.right})"


@dataclass(frozen=True)
class PNot:
    inner: Formula

    def __str__(self) -> str:
        return f"not({self.inner})"


Formula = Union[Const, PAnd, POr, PNot]
