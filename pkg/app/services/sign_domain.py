"""
The sign abstract domain: arithmetic and comparison tables, lattice order,
join and abstraction of concrete integers.

The tables below transcribe the clause lists of the abstract interpreter
row for row; `_rows` expands a clause with a wildcard or a guard into the
pairs it covers.
"""

from itertools import product
from typing import Iterable, Union

from app.exceptions import UnsupportedAbstractOp
from app.models.enums import ArithOp, CmpOp, Sign

SIGNS = (Sign.pos, Sign.neg, Sign.zero, Sign.top)

_ANY = None
# Result slot meaning "the second argument, unchanged".
_SECOND = "X"


def _rows(clauses: Iterable[tuple]) -> list[tuple[Sign, Sign, Union[Sign, bool]]]:
    expanded = []
    for clause in clauses:
        a1, a2, result, *guard = clause
        for s1, s2 in product(SIGNS, SIGNS):
            if a1 is not _ANY and s1 is not a1:
                continue
            if a2 is not _ANY and s2 is not a2:
                continue
            if guard and not guard[0](s1, s2):
                continue
            expanded.append((s1, s2, s2 if result == _SECOND else result))
    return expanded


_MUL_CLAUSES = [
    (Sign.zero, _ANY, Sign.zero),
    (Sign.pos, _ANY, _SECOND),
    (Sign.neg, Sign.zero, Sign.zero),
    (Sign.neg, Sign.pos, Sign.neg),
    (Sign.neg, Sign.neg, Sign.pos),
    (Sign.neg, Sign.top, Sign.top),
    (Sign.top, Sign.zero, Sign.zero),
    (Sign.top, _ANY, Sign.top, lambda _, x: x is not Sign.zero),
]

_ADD_CLAUSES = [
    (Sign.zero, _ANY, _SECOND),
    (Sign.pos, Sign.zero, Sign.pos),
    (Sign.pos, Sign.pos, Sign.pos),
    (Sign.pos, Sign.neg, Sign.top),
    (Sign.pos, Sign.top, Sign.top),
    (Sign.neg, Sign.zero, Sign.neg),
    (Sign.neg, Sign.pos, Sign.top),
    (Sign.neg, Sign.neg, Sign.neg),
    (Sign.neg, Sign.top, Sign.top),
    (Sign.top, _ANY, Sign.top),
]

_LE_CLAUSES = [
    (_ANY, _ANY, True, lambda x, y: x is y),
    (Sign.top, _ANY, True, lambda _, x: x is not Sign.top),
    (Sign.neg, _ANY, True, lambda _, x: x is not Sign.neg),
    (Sign.zero, Sign.pos, True),
    (Sign.zero, Sign.top, True),
    (Sign.pos, Sign.top, True),
]

_GT_CLAUSES = [
    (_ANY, Sign.top, True),
    (_ANY, Sign.neg, True),
    (Sign.pos, Sign.zero, True),
    (Sign.top, Sign.zero, True),
    (Sign.pos, Sign.pos, True),
    (Sign.top, Sign.pos, True),
]


def _table(clauses) -> dict[tuple[Sign, Sign], Sign]:
    table: dict[tuple[Sign, Sign], Sign] = {}
    for s1, s2, result in _rows(clauses):
        # first matching clause wins, as in clause order
        table.setdefault((s1, s2), result)
    return table


def _relation(clauses) -> frozenset[tuple[Sign, Sign]]:
    return frozenset((s1, s2) for s1, s2, _ in _rows(clauses))


ARITH_TABLES = {
    ArithOp.mul: _table(_MUL_CLAUSES),
    ArithOp.add: _table(_ADD_CLAUSES),
}

TRUE_RELATIONS = {
    CmpOp.le: _relation(_LE_CLAUSES),
    CmpOp.gt: _relation(_GT_CLAUSES),
}


def abs_op(op: ArithOp, a1: Sign, a2: Sign) -> Sign:
    """Abstract `a1 op a2`; `a1` is the value that was on top of the stack."""
    op = ArithOp(op)
    table = ARITH_TABLES.get(op)
    if table is None:
        raise UnsupportedAbstractOp(op.value)
    return table[(a1, a2)]


def cmp_may_true(cmp: CmpOp, a1: Sign, a2: Sign) -> bool:
    return (a1, a2) in TRUE_RELATIONS[CmpOp(cmp)]


def cmp_may_false(cmp: CmpOp, a1: Sign, a2: Sign) -> bool:
    return cmp_may_true(CmpOp(cmp).negation, a1, a2)


def leq(a1: Sign, a2: Sign) -> bool:
    """Lattice order: flat, with top above the three other values."""
    return a1 is a2 or a2 is Sign.top


def join(a1: Sign, a2: Sign) -> Sign:
    return a1 if a1 is a2 else Sign.top


def alpha(n: int) -> Sign:
    if n == 0:
        return Sign.zero
    return Sign.pos if n > 0 else Sign.neg


def gamma_sample(a: Sign, bound: int = 25) -> list[int]:
    """Concrete integers of `a` with absolute value at most `bound`."""
    values = range(-bound, bound + 1)
    if a is Sign.top:
        return list(values)
    return [n for n in values if alpha(n) is a]
