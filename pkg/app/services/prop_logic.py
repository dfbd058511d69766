"""
Propositional evaluation without negation as failure.

`sat` enumerates the substitutions that make a formula true and `nsat`
those that make it false; negation just switches between the two, so a
negated formula can still bind its variables.
"""

from typing import Iterator, Optional

from app.exceptions import NonGroundFormula
from app.models.formulas import Const, Formula, PAnd, PNot, POr
from app.models.term import Atom, Substitution, Var
from app.services.streams import bind, disj, fail, unit
from app.services.unification import is_ground, unify

TRUE = Atom("true")
FALSE = Atom("false")


def _const(term, value: Atom, s: Substitution) -> Iterator[Substitution]:
    unified = unify(term, value, s)
    return unit(unified) if unified is not None else fail()


def sat(f: Formula, s: Substitution) -> Iterator[Substitution]:
    if isinstance(f, Const):
        return _const(f.term, TRUE, s)
    if isinstance(f, PAnd):
        return bind(sat(f.left, s), lambda s1: sat(f.right, s1))
    if isinstance(f, POr):
        return disj(sat(f.left, s), lambda: sat(f.right, s))
    if isinstance(f, PNot):
        return nsat(f.inner, s)
    raise TypeError(f"not a formula: {f!r}")


def nsat(f: Formula, s: Substitution) -> Iterator[Substitution]:
    if isinstance(f, Const):
        return _const(f.term, FALSE, s)
    if isinstance(f, PAnd):
        return disj(nsat(f.left, s), lambda: nsat(f.right, s))
    if isinstance(f, POr):
        return bind(nsat(f.left, s), lambda s1: nsat(f.right, s1))
    if isinstance(f, PNot):
        return sat(f.inner, s)
    raise TypeError(f"not a formula: {f!r}")


def eval_ground(f: Formula) -> bool:
    """Classical truth value of a variable-free formula."""
    if isinstance(f, Const):
        term = f.term
        if isinstance(term, Var) or not is_ground(term, Substitution.empty()):
            raise NonGroundFormula(f)
        if term == TRUE:
            return True
        if term == FALSE:
            return False
        raise ValueError(f"constant must be true or false, got {term}")
    if isinstance(f, PAnd):
        return eval_ground(f.left) and eval_ground(f.right)
    if isinstance(f, POr):
        return eval_ground(f.left) or eval_ground(f.right)
    if isinstance(f, PNot):
        return not eval_ground(f.inner)
    raise TypeError(f"not a formula: {f!r}")


def formula_vars(f: Formula) -> list[Var]:
    found: dict[int, Var] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Const):
            if isinstance(node.term, Var):
                found.setdefault(node.term.id, node.term)
        elif isinstance(node, (PAnd, POr)):
            stack.extend([node.right, node.left])
        else:
            stack.append(node.inner)
    return list(found.values())


def substitute(f: Formula, s: Substitution, default: Optional[Atom] = None) -> Formula:
    """Apply `s` to every constant; unbound variables become `default` when given."""
    if isinstance(f, Const):
        term = s.walk(f.term)
        if isinstance(term, Var) and default is not None:
            term = default
        return Const(term)
    if isinstance(f, PAnd):
        return PAnd(substitute(f.left, s, default), substitute(f.right, s, default))
    if isinstance(f, POr):
        return POr(substitute(f.left, s, default), substitute(f.right, s, default))
    return PNot(substitute(f.inner, s, default))
