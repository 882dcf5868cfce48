"""
Delimited control with one typed delimiter per ``run``.

A ``Ctl`` value is an inert description of a computation; nothing happens
until it is handed to :func:`run`.  ``run`` interprets it with an explicit
continuation (a linked list of bind frames) and an explicit
meta-continuation (a linked list of saved continuations, one per dynamically
pushed copy of the delimiter).  Both lists are immutable and shared
structurally, so a captured continuation can be resumed any number of times.

``shift`` and ``abort`` are the primitives.  ``callcc`` and ``throw`` are
derived from them with the usual encoding::

    callcc c = shift (fun k -> k (c (fun x -> abort (k x))))
"""
from __future__ import annotations

import itertools
from typing import Any, Callable, Generic, Optional, TypeVar

A = TypeVar("A")
B = TypeVar("B")
R = TypeVar("R")

__all__ = [
    "Ctl",
    "Cont",
    "Subcont",
    "ContinuationError",
    "pure",
    "bind",
    "fmap",
    "delay",
    "run",
    "shift",
    "abort",
    "callcc",
    "throw",
]


class ContinuationError(RuntimeError):
    """A continuation was resumed outside the run that captured it."""


class Ctl(Generic[R, A]):
    """A control-effectful computation producing ``A`` under a run answering ``R``."""

    __slots__ = ()

    def bind(self, f: Callable[[A], Ctl[R, B]]) -> Ctl[R, B]:
        return _Bind(self, f)

    def map(self, f: Callable[[A], B]) -> Ctl[R, B]:
        return _Bind(self, lambda x: _Pure(f(x)))


class _Pure(Ctl):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __repr__(self):
        return f"pure({self.value!r})"


_UNIT = _Pure(None)


class _Bind(Ctl):
    __slots__ = ("m", "f")

    def __init__(self, m, f):
        self.m = m
        self.f = f


class _Shift(Ctl):
    __slots__ = ("body",)

    def __init__(self, body):
        self.body = body


class _Abort(Ctl):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


class _Resume(Ctl):
    __slots__ = ("sub", "value")

    def __init__(self, sub, value):
        self.sub = sub
        self.value = value


class _RunTag:
    __slots__ = ("serial",)
    _counter = itertools.count()

    def __init__(self):
        self.serial = next(self._counter)

    def __repr__(self):
        return f"<run #{self.serial}>"


class Subcont(Generic[R, A]):
    """Composable continuation captured by :func:`shift`.

    Calling it with a value gives a computation that replays the captured
    context under a fresh delimiter and returns the context's answer to the
    caller.
    """

    __slots__ = ("_frames", "_tag")

    def __init__(self, frames, tag: _RunTag):
        self._frames = frames
        self._tag = tag

    def __call__(self, value: A) -> Ctl[R, R]:
        return _Resume(self, value)

    def __repr__(self):
        return f"<subcont of {self._tag!r}>"


class Cont(Generic[R, A]):
    """Abortive continuation: thrown to with :func:`throw`, never returns.

    ``deliver`` maps the thrown value to the computation that abandons the
    current context.  :func:`callcc` builds these from a :class:`Subcont`;
    wrapping an existing ``Cont`` (``Cont(lambda x: throw(k, f(x)))``) is
    how a continuation is pre-composed with an injection.
    """

    __slots__ = ("_deliver",)

    def __init__(self, deliver: Callable[[A], Ctl[R, Any]]):
        self._deliver = deliver

    def __repr__(self):
        return "<cont>"


def pure(value: A) -> Ctl[Any, A]:
    return _Pure(value)


def bind(m: Ctl[R, A], f: Callable[[A], Ctl[R, B]]) -> Ctl[R, B]:
    return _Bind(m, f)


def fmap(f: Callable[[A], B], m: Ctl[R, A]) -> Ctl[R, B]:
    return m.map(f)


def delay(thunk: Callable[[], Ctl[R, A]]) -> Ctl[R, A]:
    """Defer building a computation until ``run`` reaches it."""
    return _Bind(_UNIT, lambda _: thunk())


def shift(body: Callable[[Subcont[R, A]], Ctl[R, R]]) -> Ctl[R, A]:
    """Capture the context up to the enclosing delimiter as a composable continuation."""
    return _Shift(body)


def abort(value: R) -> Ctl[R, Any]:
    """Discard the context up to the enclosing delimiter and answer ``value``."""
    return _Abort(value)


def callcc(f: Callable[[Cont[R, A]], Ctl[R, A]]) -> Ctl[R, A]:
    """Call with the current (delimited) continuation, in its abortive form."""
    return shift(lambda k: bind(f(Cont(lambda x: bind(k(x), abort))), k))


def throw(k: Cont[R, A], value: A) -> Ctl[R, Any]:
    """Resume ``k`` with ``value``, abandoning the current context."""
    return k._deliver(value)


def run(m: Ctl[R, R]) -> R:
    """Evaluate ``m`` to its answer under a fresh delimiter.

    Evaluation is a flat loop; Python stack depth does not grow with the
    number of binds, the depth of captured contexts, or the number of
    resumptions.
    """
    tag = _RunTag()
    frames: Optional[tuple] = None
    meta: Optional[tuple] = None
    cur: Ctl = m
    while True:
        t = type(cur)
        if t is _Bind:
            frames = (cur.f, frames)
            cur = cur.m
            continue
        if t is _Pure:
            value = cur.value
        elif t is _Shift:
            sub = Subcont(frames, tag)
            frames = None
            cur = cur.body(sub)
            continue
        elif t is _Abort:
            frames = None
            value = cur.value
        elif t is _Resume:
            sub = cur.sub
            if sub._tag is not tag:
                raise ContinuationError(
                    f"continuation captured under {sub._tag!r} resumed under {tag!r}"
                )
            meta = (frames, meta)
            frames = sub._frames
            value = cur.value
        else:
            raise TypeError(f"not a control computation: {cur!r}")

        while frames is None:
            if meta is None:
                return value
            frames, meta = meta
        f, frames = frames
        cur = f(value)
