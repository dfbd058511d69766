"""
Value domains the bytecode interpreter is generic over.

The concrete domain computes with Python integers and is deterministic; the
sign domain answers comparisons with "may be true" / "may be false", so both
branches of a conditional can be taken.
"""

from abc import ABC, abstractmethod
from typing import Any, Iterator

from app.exceptions import DomainMismatch
from app.models.bytecode import DomainConst
from app.models.enums import ArithOp, CmpOp, Sign
from app.services import sign_domain
from app.services.streams import unit


class ValueDomain(ABC):
    name: str = "value"

    @abstractmethod
    def inject_const(self, const: DomainConst) -> Any:
        ...

    @abstractmethod
    def ex_op(self, op: ArithOp, a1: Any, a2: Any) -> Iterator[Any]:
        """Results of `a1 op a2`, where `a1` was on top of the stack."""

    @abstractmethod
    def cmp_true(self, cmp: CmpOp, a1: Any, a2: Any) -> bool:
        ...

    @abstractmethod
    def cmp_false(self, cmp: CmpOp, a1: Any, a2: Any) -> bool:
        ...

    def __repr__(self) -> str:
        return f"<{type(self).__name__}>"


class ConcreteDomain(ValueDomain):
    name = "concrete"

    def inject_const(self, const: DomainConst) -> int:
        if isinstance(const, Sign) or not isinstance(const, int):
            raise DomainMismatch(const, self.name)
        return const

    def ex_op(self, op: ArithOp, a1: int, a2: int) -> Iterator[int]:
        op = ArithOp(op)
        if op is ArithOp.mul:
            return unit(a1 * a2)
        if op is ArithOp.add:
            return unit(a1 + a2)
        # top of stack minus the value below it
        return unit(a1 - a2)

    def cmp_true(self, cmp: CmpOp, a1: int, a2: int) -> bool:
        return a1 <= a2 if CmpOp(cmp) is CmpOp.le else a1 > a2

    def cmp_false(self, cmp: CmpOp, a1: int, a2: int) -> bool:
        return not self.cmp_true(cmp, a1, a2)


class SignDomain(ValueDomain):
    name = "sign"

    def inject_const(self, const: DomainConst) -> Sign:
        if isinstance(const, Sign):
            return const
        if isinstance(const, int):
            return sign_domain.alpha(const)
        raise DomainMismatch(const, self.name)

    def ex_op(self, op: ArithOp, a1: Sign, a2: Sign) -> Iterator[Sign]:
        return unit(sign_domain.abs_op(op, a1, a2))

    def cmp_true(self, cmp: CmpOp, a1: Sign, a2: Sign) -> bool:
        return sign_domain.cmp_may_true(cmp, a1, a2)

    def cmp_false(self, cmp: CmpOp, a1: Sign, a2: Sign) -> bool:
        return sign_domain.cmp_may_false(cmp, a1, a2)

    def join(self, a1: Sign, a2: Sign) -> Sign:
        return sign_domain.join(a1, a2)

    def leq(self, a1: Sign, a2: Sign) -> bool:
        return sign_domain.leq(a1, a2)


CONCRETE = ConcreteDomain()
SIGN = SignDomain()

DOMAINS = {CONCRETE.name: CONCRETE, SIGN.name: SIGN}
