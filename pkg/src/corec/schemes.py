"""
Corecursion schemes over streams.

* ``coiter``  -- anamorphism: head from the seed, tail from the next seed.
* ``corecM``  -- apomorphism: the step may instead hand over a finished
  remainder, which ends the loop for good.
* ``corecC``  -- classical corecursor: the step also receives a continuation
  to the caller that asked for the tail.  It is obtained from ``corecM_eff``
  and ``callcc`` (Peirce's law applied to ``stream + X``), not from
  ``coiter``: a ``callcc`` placed in a ``coiter`` step would capture the
  state update, not the tail's caller.

Each scheme comes in a pure flavor (``Stream``) and an effectful flavor
(``EffStream``, step returns a ``Ctl``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar, Union

from .control import Cont, Ctl, bind, callcc, pure, throw
from .streams import EffStream, Stream

X = TypeVar("X")
Y = TypeVar("Y")
R = TypeVar("R")


@dataclass(frozen=True)
class Finished(Generic[Y]):
    """Stop corecursing; ``remainder`` is the rest of the output."""

    remainder: Union[Stream, EffStream]


@dataclass(frozen=True)
class Seed(Generic[X]):
    """Continue corecursing from ``state``."""

    state: X


StepM = Union[Finished, Seed]


def coiter(base: Callable[[X], Y], next: Callable[[X], X], seed: X) -> Stream[Y]:
    return Stream(base(seed), lambda: coiter(base, next, next(seed)))


def coiter_eff(
    base: Callable[[X], Y], next: Callable[[X], Ctl[R, X]], seed: X
) -> EffStream[R, Y]:
    return EffStream(
        base(seed), lambda: bind(next(seed), lambda s: pure(coiter_eff(base, next, s)))
    )


def corecM(base: Callable[[X], Y], next: Callable[[X], StepM], seed: X) -> Stream[Y]:
    def tail() -> Stream[Y]:
        step = next(seed)
        if isinstance(step, Finished):
            return step.remainder
        return corecM(base, next, step.state)

    return Stream(base(seed), tail)


def corecM_eff(
    base: Callable[[X], Y], next: Callable[[X], Ctl[R, StepM]], seed: X
) -> EffStream[R, Y]:
    def resume(step: StepM) -> Ctl[R, EffStream[R, Y]]:
        if isinstance(step, Finished):
            return pure(step.remainder)
        return pure(corecM_eff(base, next, step.state))

    return EffStream(base(seed), lambda: bind(next(seed), resume))


def corecC(
    base: Callable[[X], Y],
    next: Callable[[X, Cont[R, EffStream[R, Y]]], Ctl[R, X]],
    seed: X,
) -> EffStream[R, Y]:
    """Classical corecursion.

    ``next(state, ret)`` either returns the next state or throws a stream to
    ``ret``, which makes that stream the remainder as seen by whoever forced
    the tail.  ``ret`` is multi-shot: it may be stored (in another loop's
    state, say) and thrown to later, resuming this loop's observer again.
    """
    return corecM_eff(
        base,
        lambda s: callcc(
            lambda disjret: bind(
                next(s, Cont(lambda ret: throw(disjret, Finished(ret)))),
                lambda x: pure(Seed(x)),
            )
        ),
        seed,
    )
