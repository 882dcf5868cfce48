"""
Double negation over streams, and countable choice on top of it.

A provider is a ``Ctl`` computation that delivers a ``B(n)`` to whatever
context asks for it, possibly after backtracking: the direct-style reading of
a doubly negated ``B(n)``.  :func:`dns_shift` turns a stream of providers into
a single effectful stream of delivered values, using only coiteration and
``callcc``.  Each element is revealed by capturing the observer of that
element and running the provider against it; a provider that backtracks later
re-enters that observer with its corrected value, and everything downstream
is recomputed.

:func:`ac_nat` reads a choice sequence off such a stream for a decidable
relation.  Providers deliver either a bare value or a :class:`Witness`
carrying a refutation handle; a delivered value that fails the relation is
refuted, sending control back into its provider.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, List, Optional, TypeVar

from .control import Cont, Ctl, bind, callcc, pure, throw
from .schemes import coiter_eff
from .streams import Stream, count_up, maps, take_eff

A = TypeVar("A")


@dataclass(frozen=True)
class Revealed:
    value: Any
    providers: Stream


def dns_shift(ps: Stream) -> Ctl:
    """Stream of providers -> computation of a stream of their values."""

    def reveal(providers: Stream) -> Ctl:
        return callcc(
            lambda observer: bind(
                providers.head,
                lambda x: throw(observer, Revealed(x, providers.tail())),
            )
        )

    return bind(
        reveal(ps),
        lambda first: pure(
            coiter_eff(lambda st: st.value, lambda st: reveal(st.providers), first)
        ),
    )


class ChoiceError(ValueError):
    """A provider delivered a value failing the relation and cannot be refuted."""


@dataclass(frozen=True)
class Witness(Generic[A]):
    """A candidate value, with a way to tell its provider that it was wrong."""

    value: A
    refute: Optional[Cont] = None


@dataclass(frozen=True)
class ChoiceSpec(Generic[A]):
    relation: Callable[[int, A], bool]
    providers: Stream


def _as_witness(x) -> Witness:
    return x if isinstance(x, Witness) else Witness(x)


def ac_nat(spec: ChoiceSpec, n: int) -> Ctl:
    """The first ``n`` values of a choice sequence for ``spec.relation``."""
    if n <= 0:
        return pure([])

    def settle(delivered: List[Any]) -> Ctl:
        out = []
        for i, x in enumerate(delivered):
            w = _as_witness(x)
            if not spec.relation(i, w.value):
                if w.refute is None:
                    raise ChoiceError(f"provider {i} delivered {w.value!r}")
                return throw(w.refute, i)
            out.append(w.value)
        return pure(out)

    return bind(dns_shift(spec.providers), lambda s: bind(take_eff(s, n), settle))


def retracting(*candidates: A) -> Ctl:
    """Provider offering each candidate in turn, moving on whenever it is refuted.

    The last candidate is offered without a refutation handle.
    """

    def offer(i: int) -> Ctl:
        if i == len(candidates) - 1:
            return pure(Witness(candidates[i]))
        return callcc(
            lambda k: pure(
                Witness(candidates[i], Cont(lambda _: bind(offer(i + 1), lambda w: throw(k, w))))
            )
        )

    if not candidates:
        raise ValueError("retracting needs at least one candidate")
    return offer(0)


def squares_spec(backtrack: bool = False) -> ChoiceSpec:
    """Choice for ``x == n**2``; with ``backtrack`` odd positions first offer a wrong value."""

    def provider(n: int) -> Ctl:
        if backtrack and n % 2 == 1:
            return retracting(n * n + 1, n * n)
        return pure(n * n)

    return ChoiceSpec(lambda n, x: x == n * n, maps(provider, count_up(0)))
