"""
Infinite pigeonhole: find a constant subsequence of a boolean stream.

Both searches guess that the head of the input occurs infinitely often and
hand out its indices.  On meeting the other boolean they checkpoint the outer
loop and switch the observer over to a stream of indices of the other
boolean.

``infinite_bool`` keeps the two searches alive together: the inner loop is
classical corecursion, and when the guessed boolean turns up again it hands
its own tail-caller back to the outer loop, so control can bounce between the
two as the observer demands more elements.

``infinite_bool_coiter`` uses coiteration for both loops and always switches
to the observer captured at the very start, so runs of the other boolean
that are later interrupted are dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .control import Cont, Ctl, callcc, pure, throw
from .schemes import coiter_eff, corecC
from .streams import EffStream, Stream, take

IppStream = EffStream  # of int, indices into the input


@dataclass(frozen=True)
class OuterState:
    depth: int
    rest: Stream
    switch: Cont


@dataclass(frozen=True)
class InnerState:
    depth: int
    rest: Stream


def infinite_bool(bs: Stream) -> Ctl:
    b0 = bs.head

    def outer_next(st: OuterState) -> Ctl:
        if st.rest.head == b0:
            return pure(OuterState(st.depth + 1, st.rest.tail(), st.switch))

        def pause(restart: Cont) -> Ctl:
            def inner_next(s: InnerState, ret: Cont) -> Ctl:
                if s.rest.head == b0:
                    return throw(restart, OuterState(s.depth + 1, s.rest.tail(), ret))
                return pure(InnerState(s.depth + 1, s.rest.tail()))

            others = corecC(
                lambda s: s.depth, inner_next, InnerState(st.depth + 1, st.rest.tail())
            )
            return throw(st.switch, others)

        return callcc(pause)

    return callcc(
        lambda start: pure(
            coiter_eff(lambda st: st.depth, outer_next, OuterState(0, bs.tail(), start))
        )
    )


def infinite_bool_coiter(bs: Stream) -> Ctl:
    b0 = bs.head

    def run_from(start: Cont) -> Ctl:
        def outer_next(st: InnerState) -> Ctl:
            if st.rest.head == b0:
                return pure(InnerState(st.depth + 1, st.rest.tail()))

            def pause(restart: Cont) -> Ctl:
                def inner_next(s: InnerState) -> Ctl:
                    if s.rest.head == b0:
                        return throw(restart, InnerState(s.depth + 1, s.rest.tail()))
                    return pure(InnerState(s.depth + 1, s.rest.tail()))

                others = coiter_eff(
                    lambda s: s.depth, inner_next, InnerState(st.depth + 1, st.rest.tail())
                )
                return throw(start, others)

            return callcc(pause)

        return pure(coiter_eff(lambda st: st.depth, outer_next, InnerState(0, bs.tail())))

    return callcc(run_from)


ALGORITHMS = {"corec": infinite_bool, "coiter": infinite_bool_coiter}


@dataclass
class CheckReport:
    increasing: bool = True
    constant: bool = True
    length_ok: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.increasing and self.constant and self.length_ok


def check_ipp(
    bs: Stream, indices: Sequence[int], expected_length: Optional[int] = None
) -> CheckReport:
    """Check that ``indices`` pick a strictly increasing, constant subsequence of ``bs``."""
    report = CheckReport()
    if expected_length is not None and len(indices) != expected_length:
        report.length_ok = False
        report.failures.append(f"expected {expected_length} indices, got {len(indices)}")
    for i, (a, b) in enumerate(zip(indices, indices[1:])):
        if not a < b:
            report.increasing = False
            report.failures.append(f"indices[{i}]={a} is not below indices[{i + 1}]={b}")
    if indices:
        if min(indices) < 0:
            report.constant = False
            report.failures.append("negative index")
            return report
        values = take(bs, max(indices) + 1)
        first = values[indices[0]]
        for i, ix in enumerate(indices):
            if values[ix] != first:
                report.constant = False
                report.failures.append(
                    f"bs[{ix}]={values[ix]} differs from bs[{indices[0]}]={first} (position {i})"
                )
    return report
