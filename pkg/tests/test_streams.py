import itertools
import random

import pytest

from app.services.streams import bind, commit, disj, fail, take, unit


class TestStreams:
    """Tests for the solution-stream combinators."""

    def test_unit_and_fail(self):
        assert list(unit(1)) == [1]
        assert list(fail()) == []

    def test_disj_keeps_order(self):
        assert list(disj([1, 2], lambda: [3])) == [1, 2, 3]

    def test_disj_builds_right_lazily(self):
        built = []

        def right():
            built.append(True)
            return [9]

        stream = disj(unit(1), right)
        assert next(stream) == 1
        assert built == []
        assert next(stream) == 9

    def test_bind_depth_first(self):
        result = list(bind([1, 2], lambda x: [x * 10, x * 10 + 1]))
        assert result == [10, 11, 20, 21]

    def test_commit_takes_first(self):
        assert list(commit(itertools.count())) == [0]
        assert list(commit(fail())) == []

    def test_take_on_infinite_stream(self):
        assert take(3, itertools.count()) == [0, 1, 2]
        assert take(0, itertools.count()) == []

    def test_take_negative(self):
        with pytest.raises(ValueError):
            take(-1, [])

    def test_bind_over_infinite_left_is_lazy(self):
        stream = bind(itertools.count(), lambda x: unit(x) if x % 2 else fail())
        assert take(3, stream) == [1, 3, 5]


def random_stream(rng: random.Random) -> list[int]:
    return [rng.randrange(10) for _ in range(rng.randrange(5))]


class TestStreamLaws:
    """Algebraic laws on small finite streams."""

    @pytest.mark.parametrize("seed", range(25))
    def test_disj_associative(self, seed):
        rng = random.Random(seed)
        a, b, c = random_stream(rng), random_stream(rng), random_stream(rng)
        left = list(disj(disj(a, lambda: b), lambda: c))
        right = list(disj(a, lambda: disj(b, lambda: c)))
        assert left == right == a + b + c

    @pytest.mark.parametrize("seed", range(25))
    def test_fail_is_identity(self, seed):
        a = random_stream(random.Random(seed))
        assert list(disj(fail(), lambda: a)) == a
        assert list(disj(a, fail)) == a

    @pytest.mark.parametrize("seed", range(25))
    def test_bind_distributes_over_disj(self, seed):
        rng = random.Random(seed)
        a, b = random_stream(rng), random_stream(rng)
        table = {x: random_stream(rng) for x in range(10)}

        def f(x):
            return iter(table[x])

        left = list(bind(disj(a, lambda: b), f))
        right = list(disj(bind(a, f), lambda: bind(b, f)))
        assert left == right

    @pytest.mark.parametrize("seed", range(10))
    def test_unit_is_identity_of_bind(self, seed):
        a = random_stream(random.Random(seed))
        assert list(bind(a, unit)) == a
        assert list(bind(unit(3), lambda x: iter(a))) == a
