"""
Readers for the object languages, built on the term parser: set/integer
expressions for type inference, propositional formulas, and goal lists for
the suspension engine.
"""

from app.exceptions import ParseError
from app.models.formulas import BINARY_EXPRS, Const, EmptySet, Expr, Formula, Ident, Num, PAnd, PNot, POr, SetLit
from app.models.goals import Goal, NatGoal, PlusGoal, SafeNot, UnifyGoal
from app.models.term import NIL, Atom, Compound, Int, Term, Var, list_items, render_term
from app.utils.term_parser import TermParser, parse_term


# ---- expressions ----

def term_to_expr(term: Term, line: int = 1) -> Expr:
    if isinstance(term, Int):
        return Num(term.value)
    if term == NIL:
        return EmptySet()
    if isinstance(term, Atom):
        return Ident(term.name)
    if isinstance(term, Compound):
        items = list_items(term)
        if items is not None:
            return SetLit(tuple(term_to_expr(item, line) for item in items))
        cls = BINARY_EXPRS.get(term.functor)
        if cls is not None and term.arity == 2:
            return cls(term_to_expr(term.args[0], line), term_to_expr(term.args[1], line))
    raise ParseError(line, f"not an expression: {render_term(term)}")


def parse_expr(text: str, line: int = 1) -> Expr:
    term, _ = parse_term(text, line)
    return term_to_expr(term, line)


# ---- propositional formulas ----

def term_to_formula(term: Term, line: int = 1) -> Formula:
    if isinstance(term, Compound):
        if term.functor == "const" and term.arity == 1:
            value = term.args[0]
            if isinstance(value, Var) or value in (Atom("true"), Atom("false")):
                return Const(value)
            raise ParseError(line, f"const/1 takes true, false or a variable, got {render_term(value)}")
        if term.functor in ("and", "or") and term.arity == 2:
            left = term_to_formula(term.args[0], line)
            right = term_to_formula(term.args[1], line)
            return PAnd(left, right) if term.functor == "and" else POr(left, right)
        if term.functor == "not" and term.arity == 1:
            return PNot(term_to_formula(term.args[0], line))
    raise ParseError(line, f"not a formula: {render_term(term)}")


def parse_formula(text: str, line: int = 1) -> tuple[Formula, dict[str, Var]]:
    term, names = parse_term(text, line)
    return term_to_formula(term, line), names


# ---- goals ----

def term_to_goal(term: Term, line: int = 1) -> Goal:
    if isinstance(term, Compound):
        if term.functor == "plus" and term.arity == 3:
            return PlusGoal(*term.args)
        if term.functor == "nat" and term.arity == 1:
            return NatGoal(term.args[0])
        if term.functor == "=" and term.arity == 2:
            return UnifyGoal(*term.args)
        if term.functor == "safe_not" and term.arity == 1:
            return SafeNot(term_to_goal(term.args[0], line))
    raise ParseError(line, f"not a goal: {render_term(term)}")


def parse_goals(text: str, line: int = 1) -> tuple[list[Goal], dict[str, Var]]:
    """Comma-separated goals, e.g. `plus(X,Y,Z), X = 1, safe_not(nat(Y))`."""
    parser = TermParser(text, line)
    goals: list[Goal] = []
    while True:
        left = parser.parse_term()
        if parser.accept("sym", "="):
            goals.append(UnifyGoal(left, parser.parse_term()))
        else:
            goals.append(term_to_goal(left, line))
        if not parser.accept("punct", ","):
            break
    parser.accept("sym", ".")
    parser.expect_end()
    return goals, parser.names
