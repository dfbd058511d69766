"""
Unification with occurs check over `app.models.term` terms.
"""

from typing import Optional

from app.models.term import Compound, Substitution, Term, Var


def occurs(var: Var, term: Term, s: Substitution) -> bool:
    stack = [term]
    while stack:
        t = s.walk(stack.pop())
        if isinstance(t, Var):
            if t.id == var.id:
                return True
        elif isinstance(t, Compound):
            stack.extend(t.args)
    return False


def unify(t1: Term, t2: Term, s: Substitution) -> Optional[Substitution]:
    """
    Most general unifier of `t1` and `t2` extending `s`.

    Args:
        t1: First term
        t2: Second term
        s: Bindings already in force

    Returns:
        The extended substitution, or None when the terms do not unify
        (including when a variable would have to contain itself)
    """
    pending = [(t1, t2)]
    while pending:
        a, b = pending.pop()
        a = s.walk(a)
        b = s.walk(b)
        if a == b:
            continue
        if isinstance(a, Var):
            if occurs(a, b, s):
                return None
            s = s.extend(a, b)
        elif isinstance(b, Var):
            if occurs(b, a, s):
                return None
            s = s.extend(b, a)
        elif isinstance(a, Compound) and isinstance(b, Compound):
            if a.functor != b.functor or a.arity != b.arity:
                return None
            # reversed so the leftmost argument pair is decomposed first
            pending.extend(reversed(list(zip(a.args, b.args))))
        else:
            return None
    return s


def resolve(t: Term, s: Substitution) -> Term:
    """Replace every bound variable of `t`, to fixpoint."""
    t = s.walk(t)
    if not isinstance(t, Compound):
        return t
    # post-order over an explicit stack; lists and s/1 chains nest arbitrarily deep
    built: list[Term] = []
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, done = stack.pop()
        if not isinstance(node, Compound):
            built.append(node)
        elif done:
            start = len(built) - node.arity
            args = tuple(built[start:])
            del built[start:]
            built.append(Compound(node.functor, args))
        else:
            stack.append((node, True))
            stack.extend((s.walk(arg), False) for arg in reversed(node.args))
    return built[0]


def is_ground(t: Term, s: Substitution) -> bool:
    stack = [t]
    while stack:
        current = s.walk(stack.pop())
        if isinstance(current, Var):
            return False
        if isinstance(current, Compound):
            stack.extend(current.args)
    return True
