"""Command line: ``corec ipp``, ``corec laws``, ``corec choice``.

Exit codes: 0 success, 1 an invariant check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import laws as law_suite
from .choice import ac_nat, squares_spec
from .control import bind, pure, run
from .ipp import ALGORITHMS, check_ipp
from .schemes import coiter
from .streams import Stream, append, take_eff

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2

_LETTERS = {"T": True, "F": False}


@dataclass(frozen=True)
class StreamSpec:
    """``<prefix>:<cycle>`` over ``T``/``F``: the prefix, then the cycle forever."""

    prefix: Tuple[bool, ...]
    cycle: Tuple[bool, ...]

    @classmethod
    def parse(cls, text: str) -> StreamSpec:
        prefix, sep, cycle = text.strip().partition(":")
        if not sep:
            raise ValueError(f"stream spec {text!r} needs a ':' between prefix and cycle")
        if not cycle:
            raise ValueError(f"stream spec {text!r} has an empty cycle")
        bad = set(prefix + cycle) - set(_LETTERS)
        if bad:
            raise ValueError(f"stream spec {text!r} uses letters other than T/F: {sorted(bad)}")
        return cls(tuple(_LETTERS[c] for c in prefix), tuple(_LETTERS[c] for c in cycle))

    @property
    def eventually_constant(self) -> bool:
        return len(set(self.cycle)) == 1

    def to_stream(self) -> Stream:
        cycle = self.cycle
        repeated = coiter(lambda i: cycle[i], lambda i: (i + 1) % len(cycle), 0)
        return append(self.prefix, repeated)

    def __str__(self):
        show = lambda bs: "".join("T" if b else "F" for b in bs)
        return f"{show(self.prefix)}:{show(self.cycle)}"


def render(value) -> str:
    """OCaml-style list rendering: ``[1; 2; 4]``, nested lists likewise."""
    if isinstance(value, (list, tuple)):
        return "[" + "; ".join(render(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def observe_ipp(spec: StreamSpec, algo: str, observations: Sequence[int]) -> List[List[int]]:
    """Bind the index stream once and take each observation from it, left to right."""
    program = ALGORITHMS[algo]

    def observe_all(ix):
        def go(i, acc):
            if i == len(observations):
                return pure(acc)
            return bind(take_eff(ix, observations[i]), lambda xs: go(i + 1, acc + [xs]))

        return go(0, [])

    return run(bind(program(spec.to_stream()), observe_all))


def cmd_ipp(
    spec: StreamSpec,
    algo: str,
    take: Optional[int] = None,
    observations: Optional[Sequence[int]] = None,
    as_json: bool = False,
) -> Tuple[str, int]:
    if observations is None:
        if take is None:
            raise ValueError("give --take or --observe")
        observations = [take]
        single = True
    else:
        single = False
    if any(n < 0 for n in observations):
        raise ValueError("observation sizes must be non-negative")
    results = observe_ipp(spec, algo, observations)
    bs = spec.to_stream()
    reports = [check_ipp(bs, xs, n) for xs, n in zip(results, observations)]
    data = results[0] if single else results
    text = json.dumps(data) if as_json else render(data)
    for r in reports:
        for failure in r.failures:
            text += f"\ncheck: {failure}"
    return text, EXIT_OK if all(r.ok for r in reports) else EXIT_INVARIANT


def cmd_laws(cases=None) -> Tuple[str, int]:
    results = law_suite.check_laws(law_suite.all_cases() if cases is None else cases)
    lines = []
    for r in results:
        verdict = "PASS" if r.passed else "FAIL"
        lines.append(f"{verdict} {r.law} ({r.cases} cases)")
        lines.extend(f"    {f}" for f in r.failures)
    ok = all(r.passed for r in results)
    return "\n".join(lines), EXIT_OK if ok else EXIT_INVARIANT


def cmd_choice(n: int, backtrack: bool = False, as_json: bool = False) -> Tuple[str, int]:
    if n < 0:
        raise ValueError("n must be non-negative")
    spec = squares_spec(backtrack)
    values = run(ac_nat(spec, n))
    ok = len(values) == n and all(spec.relation(i, x) for i, x in enumerate(values))
    body = json.dumps(values) if as_json else render(values)
    return f"{body}\nrelation: {'OK' if ok else 'FAILED'}", EXIT_OK if ok else EXIT_INVARIANT


def _sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated naturals, got {text!r}")


def _nat(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = -1
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ipp", help="run an infinite pigeonhole search on a boolean stream")
    p.add_argument("--stream", required=True, help="stream spec such as TFFTF:T")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="corec")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--take", type=_nat)
    group.add_argument("--observe", type=_sizes, help="e.g. 3,5: several takes from one search")
    p.add_argument("--json", action="store_true")

    sub.add_parser("laws", help="check the control engine's equational laws")

    p = sub.add_parser("choice", help="countable choice demo for the squares relation")
    p.add_argument("n", type=_nat)
    p.add_argument("--backtrack", action="store_true", help="odd positions offer a wrong value first")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ipp":
            spec = StreamSpec.parse(args.stream)
            if not spec.eventually_constant:
                print(
                    f"warning: cycle of {spec} is not constant; "
                    "large observations may take long to satisfy",
                    file=sys.stderr,
                )
            text, code = cmd_ipp(spec, args.algo, args.take, args.observe, args.json)
        elif args.command == "laws":
            text, code = cmd_laws()
        else:
            text, code = cmd_choice(args.n, args.backtrack, args.json)
    except ValueError as exc:
        print(f"corec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
