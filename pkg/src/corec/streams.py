"""
Lazy streams with a strict head and a suspended tail.

``Stream`` tails are plain thunks and are memoized after the first force.
``EffStream`` tails are thunks returning a control computation; they are
never memoized, because re-forcing after a backtrack must re-run effects.
"""
from __future__ import annotations

from typing import Callable, Generic, Iterable, List, TypeVar

from .control import Ctl, bind, delay, pure

A = TypeVar("A")
B = TypeVar("B")
R = TypeVar("R")

_UNFORCED = object()


class Stream(Generic[A]):
    __slots__ = ("head", "_thunk", "_tail")

    def __init__(self, head: A, tail: Callable[[], Stream[A]]):
        self.head = head
        self._thunk = tail
        self._tail = _UNFORCED

    def tail(self) -> Stream[A]:
        # A racing second force just recomputes the same pure value.
        t = self._tail
        if t is _UNFORCED:
            t = self._thunk()
            self._tail = t
            self._thunk = None
        return t

    def __repr__(self):
        return f"Stream({self.head!r}, ...)"


class EffStream(Generic[R, A]):
    __slots__ = ("head", "_thunk")

    def __init__(self, head: A, tail: Callable[[], Ctl[R, EffStream[R, A]]]):
        self.head = head
        self._thunk = tail

    def tail(self) -> Ctl[R, EffStream[R, A]]:
        return self._thunk()

    def __repr__(self):
        return f"EffStream({self.head!r}, ...)"


def cons(head: A, tail: Callable[[], Stream[A]]) -> Stream[A]:
    return Stream(head, tail)


def always(x: A) -> Stream[A]:
    s = Stream(x, lambda: s)
    return s


zeroes = always(0)


def repeat_fn(f: Callable[[A], A], x: A) -> Stream[A]:
    """``x, f(x), f(f(x)), ...``"""
    return Stream(x, lambda: repeat_fn(f, f(x)))


def count_up(n: int) -> Stream[int]:
    return Stream(n, lambda: count_up(n + 1))


def count_down(n: int) -> Stream[int]:
    """``n, n-1, ..., 1, 0, 0, ...``; hands over to ``zeroes`` once it reaches 0."""
    return Stream(n, lambda: zeroes if n == 0 else count_down(n - 1))


def maps(f: Callable[[A], B], s: Stream[A]) -> Stream[B]:
    from .schemes import coiter

    return coiter(lambda xs: f(xs.head), lambda xs: xs.tail(), s)


def append(prefix: Iterable[A], s: Stream[A]) -> Stream[A]:
    items = tuple(prefix)

    def go(i: int) -> Stream[A]:
        if i == len(items):
            return s
        return Stream(items[i], lambda: go(i + 1))

    return go(0)


def lift(s: Stream[A]) -> EffStream[R, A]:
    """View a pure stream as an effectful one whose tails have no effects."""
    return EffStream(s.head, lambda: pure(lift(s.tail())))


def take(s: Stream[A], n: int) -> List[A]:
    """First ``n`` heads of ``s``; forces exactly ``max(n - 1, 0)`` tails."""
    out: List[A] = []
    if n <= 0:
        return out
    while True:
        out.append(s.head)
        if len(out) == n:
            return out
        s = s.tail()


def take_eff(s: EffStream[R, A], n: int) -> Ctl[R, List[A]]:
    """Effectful ``take``: tail forcing is sequenced through the control engine.

    The accumulator is a persistent cons list so that a context re-entered by
    a backtrack sees the prefix it had at capture time.
    """
    if n <= 0:
        return pure([])

    def finish(acc) -> List[A]:
        out = []
        while acc is not None:
            x, acc = acc
            out.append(x)
        out.reverse()
        return out

    def go(s: EffStream[R, A], remaining: int, acc) -> Ctl[R, List[A]]:
        acc = (s.head, acc)
        if remaining == 1:
            return pure(finish(acc))
        return bind(s.tail(), lambda t: go(t, remaining - 1, acc))

    return delay(lambda: go(s, n, None))
