"""
Solution streams.

A stream is any iterator of answers. Combinators here keep Prolog's
enumeration order: depth-first, alternatives in source order, and nothing is
computed before the consumer asks for it.
"""

import itertools
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def unit(value: T) -> Iterator[T]:
    return iter((value,))


def fail() -> Iterator:
    return iter(())


def disj(a: Iterable[T], b: Callable[[], Iterable[T]]) -> Iterator[T]:
    """All answers of `a`, then all answers of `b()`; `b` is built only once `a` is exhausted."""
    yield from a
    yield from b()


def bind(a: Iterable[T], f: Callable[[T], Iterable[U]]) -> Iterator[U]:
    for x in a:
        yield from f(x)


def commit(a: Iterable[T]) -> Iterator[T]:
    """Keep the first answer and drop the remaining alternatives."""
    return itertools.islice(a, 1)


def take(n: int, a: Iterable[T]) -> list[T]:
    if n < 0:
        raise ValueError("take() needs a non-negative count")
    return list(itertools.islice(a, n))
