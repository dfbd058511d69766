"""
Type inference for the set/integer formula language.

Types are logic terms: `integer`, `predicate` and `set(T)`. The environment
of identifiers is threaded left to right through the expression; the first
rule whose head matches a node is committed to, and when its unifications
fail the node is reported as a type error instead of trying other rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from app.models.formulas import (
    And,
    EmptySet,
    Eq,
    Expr,
    Gt,
    Ident,
    InSet,
    Intersect,
    Num,
    Plus,
    SetLit,
    SetUnion,
)
from app.models.term import Atom, Compound, Substitution, Term, VarContext, canonical_names, render_term
from app.services.streams import commit
from app.services.unification import resolve, unify

INTEGER = Atom("integer")
PREDICATE = Atom("predicate")


def set_of(element: Term) -> Term:
    return Compound("set", (element,))


@dataclass(frozen=True)
class TypeEnv:
    """Identifier types, newest binding first."""

    bindings: tuple[tuple[str, Term], ...] = ()

    def lookup(self, name: str) -> Optional[Term]:
        for ident, type_ in self.bindings:
            if ident == name:
                return type_
        return None

    def add(self, name: str, type_: Term) -> TypeEnv:
        return TypeEnv(((name, type_),) + self.bindings)


@dataclass(frozen=True)
class TypeOk:
    type: Term
    env: TypeEnv
    subst: Substitution = field(compare=False)


@dataclass(frozen=True)
class TypeErrorReport:
    expr: Expr
    expected: Term
    env: TypeEnv
    subst: Substitution = field(compare=False)


TypeResult = Union[TypeOk, TypeErrorReport]


class _Mismatch(Exception):
    def __init__(self, expr: Expr, expected: Term, env: TypeEnv, subst: Substitution):
        self.expr = expr
        self.expected = expected
        self.env = env
        self.subst = subst


class TypeInferencer:
    """One inference run: owns the fresh type variables and a visit counter."""

    def __init__(self):
        self.ctx = VarContext(start=1)
        self.visits = 0

    def infer(self, expr: Expr) -> TypeResult:
        result = self.ctx.fresh()
        try:
            env, subst = self._type(expr, result, TypeEnv(), Substitution.empty())
        except _Mismatch as failure:
            return TypeErrorReport(
                failure.expr,
                resolve(failure.expected, failure.subst),
                failure.env,
                failure.subst,
            )
        return TypeOk(resolve(result, subst), env, subst)

    def _expect(self, expr, expected, actual, env, subst) -> Substitution:
        unified = unify(expected, actual, subst)
        if unified is None:
            raise _Mismatch(expr, expected, env, subst)
        return unified

    def _type(self, expr: Expr, expected: Term, env: TypeEnv, s: Substitution) -> tuple[TypeEnv, Substitution]:
        self.visits += 1
        heads = (rule for kinds, rule in self.RULES if isinstance(expr, kinds))
        for rule in commit(heads):
            return rule(self, expr, expected, env, s)
        raise TypeError(f"not an expression: {expr!r}")

    # ---- rules, one per expression form ----

    def _empty_set(self, expr, expected, env, s):
        return env, self._expect(expr, expected, set_of(self.ctx.fresh()), env, s)

    def _set_op(self, expr, expected, env, s):
        elem = self.ctx.fresh()
        s = self._expect(expr, expected, set_of(elem), env, s)
        env, s = self._type(expr.a, set_of(elem), env, s)
        return self._type(expr.b, set_of(elem), env, s)

    def _plus(self, expr, expected, env, s):
        s = self._expect(expr, expected, INTEGER, env, s)
        env, s = self._type(expr.a, INTEGER, env, s)
        return self._type(expr.b, INTEGER, env, s)

    def _in_set(self, expr, expected, env, s):
        s = self._expect(expr, expected, PREDICATE, env, s)
        elem = self.ctx.fresh()
        env, s = self._type(expr.a, elem, env, s)
        return self._type(expr.b, set_of(elem), env, s)

    def _comparison(self, expr, expected, env, s):
        s = self._expect(expr, expected, PREDICATE, env, s)
        env, s = self._type(expr.a, INTEGER, env, s)
        return self._type(expr.b, INTEGER, env, s)

    def _conjunction(self, expr, expected, env, s):
        s = self._expect(expr, expected, PREDICATE, env, s)
        env, s = self._type(expr.a, PREDICATE, env, s)
        return self._type(expr.b, PREDICATE, env, s)

    def _equality(self, expr, expected, env, s):
        s = self._expect(expr, expected, PREDICATE, env, s)
        shared = self.ctx.fresh()
        env, s = self._type(expr.a, shared, env, s)
        return self._type(expr.b, shared, env, s)

    def _number(self, expr, expected, env, s):
        return env, self._expect(expr, expected, INTEGER, env, s)

    def _set_literal(self, expr, expected, env, s):
        elem = self.ctx.fresh()
        s = self._expect(expr, expected, set_of(elem), env, s)
        for item in expr.elems:
            env, s = self._type(item, elem, env, s)
            # the next list cell, or the closing `[]`
            self.visits += 1
        return env, s

    def _identifier(self, expr, expected, env, s):
        known = env.lookup(expr.name)
        if known is None:
            return env.add(expr.name, expected), s
        return env, self._expect(expr, expected, known, env, s)

    # clause order; the first matching head is committed to
    RULES = (
        (EmptySet, _empty_set),
        ((SetUnion, Intersect), _set_op),
        (Plus, _plus),
        (InSet, _in_set),
        (Gt, _comparison),
        (And, _conjunction),
        (Eq, _equality),
        (Num, _number),
        (SetLit, _set_literal),
        (Ident, _identifier),
    )


def infer(expr: Expr) -> TypeResult:
    return TypeInferencer().infer(expr)


def render_env(env: TypeEnv, s: Substitution, names: Optional[dict[int, str]] = None) -> str:
    """`[id(name,type),...]`, newest first, unbound type variables numbered `_1`, `_2`, ..."""
    resolved = [(ident, resolve(type_, s)) for ident, type_ in env.bindings]
    if names is None:
        names = canonical_names([type_ for _, type_ in resolved])
    return "[" + ",".join(f"id({ident},{render_term(type_, names)})" for ident, type_ in resolved) + "]"


def render_result(result: TypeResult) -> list[str]:
    """Output lines for a typing run, in the style of the interactive top level."""
    if isinstance(result, TypeOk):
        env_types = [resolve(type_, result.subst) for _, type_ in result.env.bindings]
        names = canonical_names(env_types + [result.type])
        return [
            f"Typing env: {render_env(result.env, result.subst, names)}",
            f"R = {render_term(result.type, names)}",
        ]
    env_types = [resolve(type_, result.subst) for _, type_ in result.env.bindings]
    names = canonical_names([result.expected] + env_types)
    return [
        f"Type error for {result.expr} "
        f"(expected: {render_term(result.expected, names)}, "
        f"Env: {render_env(result.env, result.subst, names)})"
    ]
