"""Executable equational laws of the control engine, over fixed fixture programs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List

from .control import Cont, abort, bind, callcc, pure, run, shift, throw


@dataclass(frozen=True)
class LawCase:
    law: str
    label: str
    lhs: Callable[[], Any]
    rhs: Callable[[], Any]


@dataclass(frozen=True)
class LawResult:
    law: str
    cases: int
    failures: List[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def _double_resume(x):
    return bind(shift(lambda k: bind(k(x), lambda r: k(r))), lambda y: pure(y + 1))


def _odd_throw(x):
    return callcc(lambda c: throw(c, x + 7) if x % 2 else pure(x))


# Continuations of the law's left-hand side: the context a value flows into.
TAILS: Dict[str, Callable[[Any], Any]] = {
    "inc": lambda x: pure(x + 1),
    "arith": lambda x: bind(pure(x * 2), lambda y: pure(y - 3)),
    "abort": lambda x: abort(x * 10),
    "double-resume": _double_resume,
    "callcc-throw": _odd_throw,
    "discard": lambda x: bind(shift(lambda k: pure(-x)), pure),
}

VALUES = (0, 1, 5, -4, 12)

BODIES = {
    "pure": lambda: pure(41),
    "abort": lambda: abort(17),
    "bind": lambda: bind(pure(2), lambda x: pure(x ** 5)),
    "inner-shift": lambda: bind(shift(lambda k: bind(k(3), lambda r: k(r))), lambda x: pure(x * 4)),
    "callcc": lambda: bind(callcc(lambda c: throw(c, 8)), lambda x: pure(x - 1)),
}

# Receivers handed to callcc: Cont -> Ctl.
RECEIVERS = {
    "ignore": lambda c: pure(3),
    "throw": lambda c: throw(c, 4),
    "throw-discard": lambda c: bind(throw(c, 6), lambda _: pure(999)),
    "escape-late": lambda c: bind(pure(2), lambda x: throw(c, x * 11)),
    "conditional-throw": lambda c: bind(pure(1), lambda x: throw(c, x) if x else pure(0)),
}


def beta_cases() -> List[LawCase]:
    out = []
    for name, tail in TAILS.items():
        for v in VALUES:
            out.append(
                LawCase(
                    "beta",
                    f"{name}/{v}",
                    lambda tail=tail, v=v: run(bind(shift(lambda k: k(v)), tail)),
                    lambda tail=tail, v=v: run(bind(pure(v), tail)),
                )
            )
    return out


def discard_cases() -> List[LawCase]:
    out = []
    for bname, body in BODIES.items():
        for tname, tail in TAILS.items():
            out.append(
                LawCase(
                    "context-discard",
                    f"{bname}/{tname}",
                    lambda body=body, tail=tail: run(bind(shift(lambda k: body()), tail)),
                    lambda body=body: run(body()),
                )
            )
    return out


def callcc_unused_cases() -> List[LawCase]:
    out = []
    for name, tail in TAILS.items():
        for v in VALUES:
            out.append(
                LawCase(
                    "callcc-unused",
                    f"{name}/{v}",
                    lambda tail=tail, v=v: run(bind(callcc(lambda k: pure(v)), tail)),
                    lambda tail=tail, v=v: run(bind(pure(v), tail)),
                )
            )
    return out


def _collect_composable(values, step):
    """Resume one composable continuation once per value, gathering the answers."""

    def resume_all(k):
        def go(i, acc):
            if i == len(values):
                return pure(acc)
            return bind(k(values[i]), lambda r: go(i + 1, acc + (r,)))

        return go(0, ())

    return run(bind(shift(resume_all), lambda x: pure(step(x))))


def _collect_abortive(values, step):
    """Re-enter one abortive continuation once per value; the accumulator rides along."""

    def context(state):
        k, i, acc = state
        if i == len(values):
            return pure(acc)
        return throw(k, (k, i + 1, acc + (step(values[i]),)))

    return run(bind(callcc(lambda k: pure((k, 0, ()))), context))


STEPS = {
    "square": lambda x: x * x,
    "tag": lambda x: ("seen", x),
    "neg": lambda x: -x,
    "str": lambda x: f"<{x}>",
    "pair": lambda x: (x, x + 1),
}


def multishot_cases() -> List[LawCase]:
    out = []
    values = (3, 8, -1)
    for name, step in STEPS.items():
        expected = lambda step=step: tuple(step(v) for v in values)
        out.append(
            LawCase(
                "multi-shot",
                f"composable/{name}",
                lambda step=step: _collect_composable(values, step),
                expected,
            )
        )
        out.append(
            LawCase(
                "multi-shot",
                f"abortive/{name}",
                lambda step=step: _collect_abortive(values, step),
                expected,
            )
        )
    return out


def _callcc_by_hand(f):
    return shift(lambda k: bind(f(Cont(lambda x: bind(k(x), abort))), k))


def derivation_cases() -> List[LawCase]:
    out = []
    for rname, f in RECEIVERS.items():
        for tname, tail in TAILS.items():
            out.append(
                LawCase(
                    "callcc-from-shift",
                    f"{rname}/{tname}",
                    lambda f=f, tail=tail: run(bind(callcc(f), tail)),
                    lambda f=f, tail=tail: run(bind(_callcc_by_hand(f), tail)),
                )
            )
    return out


def associativity_cases() -> List[LawCase]:
    out = []
    for bname, body in BODIES.items():
        for f_name, f in TAILS.items():
            for g_name, g in (("inc", TAILS["inc"]), ("double-resume", TAILS["double-resume"])):
                out.append(
                    LawCase(
                        "associativity",
                        f"{bname}/{f_name}/{g_name}",
                        lambda body=body, f=f, g=g: run(bind(bind(body(), f), g)),
                        lambda body=body, f=f, g=g: run(bind(body(), lambda x: bind(f(x), g))),
                    )
                )
    return out


def all_cases() -> List[LawCase]:
    return (
        beta_cases()
        + discard_cases()
        + callcc_unused_cases()
        + multishot_cases()
        + derivation_cases()
        + associativity_cases()
    )


def check_laws(cases: Iterable[LawCase]) -> List[LawResult]:
    counts: Dict[str, int] = {}
    failures: Dict[str, List[str]] = {}
    for case in cases:
        counts[case.law] = counts.get(case.law, 0) + 1
        bad = failures.setdefault(case.law, [])
        try:
            lhs, rhs = case.lhs(), case.rhs()
        except Exception as exc:  # a crashing fixture is a failed law
            bad.append(f"{case.label}: {type(exc).__name__}: {exc}")
            continue
        if lhs != rhs:
            bad.append(f"{case.label}: {lhs!r} != {rhs!r}")
    return [LawResult(law, counts[law], failures[law]) for law in counts]
