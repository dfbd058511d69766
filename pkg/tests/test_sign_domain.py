"""Exhaustive checks of the sign tables against concrete arithmetic."""

from itertools import product

import pytest

from app.exceptions import UnsupportedAbstractOp
from app.models.enums import ArithOp, CmpOp, Sign
from app.services import sign_domain
from app.services.domains import CONCRETE, SIGN
from app.services.sign_domain import SIGNS, abs_op, alpha, cmp_may_false, cmp_may_true, gamma_sample, join, leq

PAIRS = list(product(SIGNS, SIGNS))


class TestTables:
    """Spot checks of single table rows."""

    @pytest.mark.parametrize("a1,a2,expected", [
        (Sign.pos, Sign.pos, Sign.pos),
        (Sign.neg, Sign.neg, Sign.pos),
        (Sign.zero, Sign.top, Sign.zero),
        (Sign.top, Sign.zero, Sign.zero),
        (Sign.top, Sign.neg, Sign.top),
    ])
    def test_mul(self, a1, a2, expected):
        assert abs_op(ArithOp.mul, a1, a2) is expected

    @pytest.mark.parametrize("a1,a2,expected", [
        (Sign.neg, Sign.pos, Sign.top),
        (Sign.pos, Sign.pos, Sign.pos),
        (Sign.zero, Sign.neg, Sign.neg),
        (Sign.neg, Sign.zero, Sign.neg),
    ])
    def test_add(self, a1, a2, expected):
        assert abs_op(ArithOp.add, a1, a2) is expected

    def test_tables_are_total(self):
        for op in (ArithOp.mul, ArithOp.add):
            assert set(sign_domain.ARITH_TABLES[op]) == set(PAIRS)

    def test_subtraction_unsupported(self):
        with pytest.raises(UnsupportedAbstractOp):
            abs_op(ArithOp.sub, Sign.pos, Sign.pos)


class TestSoundness:
    """Every concrete result is covered by the abstract one."""

    @pytest.mark.parametrize("op", [ArithOp.mul, ArithOp.add])
    @pytest.mark.parametrize("a1,a2", PAIRS)
    def test_arithmetic(self, op, a1, a2):
        abstract = abs_op(op, a1, a2)
        for c1 in gamma_sample(a1):
            for c2 in gamma_sample(a2):
                (concrete,) = CONCRETE.ex_op(op, c1, c2)
                assert leq(alpha(concrete), abstract)

    @pytest.mark.parametrize("cmp", [CmpOp.le, CmpOp.gt])
    @pytest.mark.parametrize("a1,a2", PAIRS)
    def test_comparisons_are_exact(self, cmp, a1, a2):
        outcomes = {
            CONCRETE.cmp_true(cmp, c1, c2)
            for c1 in gamma_sample(a1)
            for c2 in gamma_sample(a2)
        }
        assert cmp_may_true(cmp, a1, a2) == (True in outcomes)
        assert cmp_may_false(cmp, a1, a2) == (False in outcomes)


class TestLattice:
    """Join and order laws over every sign."""

    def test_join_laws(self):
        for x, y, z in product(SIGNS, repeat=3):
            assert join(x, x) is x
            assert join(x, y) is join(y, x)
            assert join(join(x, y), z) is join(x, join(y, z))
            assert leq(x, join(x, y))
            assert leq(x, y) == (join(x, y) is y)

    def test_top_is_greatest(self):
        assert all(leq(x, Sign.top) for x in SIGNS)

    @pytest.mark.parametrize("n,expected", [(5, Sign.pos), (-3, Sign.neg), (0, Sign.zero)])
    def test_alpha(self, n, expected):
        assert alpha(n) is expected
        assert SIGN.inject_const(n) is expected

    def test_gamma_sample_bound(self):
        assert gamma_sample(Sign.zero) == [0]
        assert len(gamma_sample(Sign.top)) == 51
        assert all(n > 0 for n in gamma_sample(Sign.pos, bound=3))
