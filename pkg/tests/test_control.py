import threading

import pytest
from hypothesis import given, strategies as st

from corec.control import (
    Cont,
    ContinuationError,
    abort,
    bind,
    callcc,
    delay,
    pure,
    run,
    shift,
    throw,
)
from corec.laws import TAILS, check_laws, all_cases

inc = lambda x: pure(x + 1)


def test_pure():
    assert run(pure(42)) == 42
    assert run(bind(pure(1), inc)) == 2
    assert run(pure([])) == []


def test_bind():
    assert run(bind(pure(3), lambda x: pure(x * 2))) == 6
    assert run(bind(abort(7), lambda _: pure(0))) == 7
    assert run(bind(bind(pure(1), inc), inc)) == 3


def test_bind_sequences_left_to_right():
    log = []

    def note(tag):
        def f(x):
            log.append(tag)
            return pure(x)

        return f

    run(bind(bind(delay(lambda: note("m")(0)), note("f")), note("g")))
    assert log == ["m", "f", "g"]


def test_construction_performs_no_effects():
    log = []
    m = delay(lambda: log.append("ran") or pure(1))
    m = bind(m, inc)
    assert log == []
    assert run(m) == 2
    assert log == ["ran"]


def test_run_nested():
    assert run(pure(run(pure(5)))) == 5


def test_shift_double_resume():
    # Hand CPS: the captured context is x -> x + 1, applied twice to 0.
    k = lambda x: x + 1
    expected = k(k(0))
    prog = bind(shift(lambda k: bind(k(0), lambda r: k(r))), inc)
    assert run(prog) == expected == 2


def test_shift_single_resume_and_discard():
    assert run(bind(shift(lambda k: k(9)), pure)) == 9
    assert run(bind(shift(lambda k: pure(100)), inc)) == 100


def test_abort():
    assert run(abort(3)) == 3
    assert run(bind(pure(1), lambda _: abort(2))) == 2


def test_callcc():
    assert run(bind(callcc(lambda k: pure(5)), inc)) == 6
    # Hand CPS: throw hands 3 to the context x -> x + 1; the 999 branch is dead.
    expected = (lambda x: x + 1)(3)
    prog = bind(callcc(lambda k: bind(throw(k, 3), lambda _: pure(999))), inc)
    assert run(prog) == expected == 4


def test_throw_from_two_points_resumes_same_context():
    # k is re-entered from each pass through its own context.
    seen = []

    def context(x):
        k, n = x
        seen.append(n)
        if n < 3:
            return bind(pure(None), lambda _: throw(k, (k, n + 1)))
        return pure(n * 2)

    assert run(bind(callcc(lambda k: pure((k, 0))), context)) == 6
    assert seen == [0, 1, 2, 3]


def test_throw_never_returns():
    after = []
    prog = bind(
        callcc(lambda k: bind(throw(k, 1), lambda x: after.append(x) or pure(x))), inc
    )
    assert run(prog) == 2
    assert after == []


def test_subcont_outside_its_run_is_rejected():
    k = run(shift(lambda k: pure(k)))
    with pytest.raises(ContinuationError):
        run(k(1))


def test_abortive_cont_outside_its_run_is_rejected():
    k = run(callcc(lambda k: pure(k)))
    assert isinstance(k, Cont)
    with pytest.raises(ContinuationError):
        run(throw(k, 0))


def test_non_computation_in_bind_is_reported():
    with pytest.raises(TypeError):
        run(bind(pure(1), lambda x: x))


def test_law_suite_passes():
    results = check_laws(all_cases())
    laws = {r.law for r in results}
    assert {"beta", "context-discard", "callcc-unused", "multi-shot", "callcc-from-shift"} <= laws
    for r in results:
        assert r.cases >= 5
        assert r.passed, r.failures


def test_left_nested_bind_chain_is_stack_safe():
    m = pure(0)
    for _ in range(1_000_000):
        m = bind(m, inc)
    assert run(m) == 1_000_000


def test_right_nested_bind_chain_is_stack_safe():
    def count(i):
        return pure(i) if i == 200_000 else bind(pure(i + 1), count)

    assert run(count(0)) == 200_000


def test_deep_resumption_chain_is_stack_safe():
    def loop(state):
        k, n = state
        return pure(n) if n == 100_000 else throw(k, (k, n + 1))

    assert run(bind(callcc(lambda k: pure((k, 0))), loop)) == 100_000


def test_independent_runs_on_threads():
    results = {}

    def work(i):
        prog = bind(shift(lambda k: bind(k(i), lambda r: k(r))), inc)
        results[i] = [run(prog) for _ in range(200)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == {i: [i + 2] * 200 for i in range(8)}


tails = st.sampled_from(sorted(TAILS))


@given(st.integers(-50, 50), tails, tails)
def test_associativity(v, f_name, g_name):
    f, g = TAILS[f_name], TAILS[g_name]
    for m in (pure(v), shift(lambda k: bind(k(v), lambda r: k(r))), callcc(lambda c: throw(c, v))):
        assert run(bind(bind(m, f), g)) == run(bind(m, lambda x: bind(f(x), g)))


@given(st.integers(-50, 50), tails)
def test_beta(v, name):
    tail = TAILS[name]
    assert run(bind(shift(lambda k: k(v)), tail)) == run(bind(pure(v), tail))


@given(st.integers(-50, 50), st.integers(-50, 50), tails)
def test_context_discard(v, w, name):
    assert run(bind(shift(lambda k: pure(w)), TAILS[name])) == w
    assert run(bind(shift(lambda k: abort(w)), TAILS[name])) == w


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_multishot_matches_reexecution(values):
    ctx = lambda x: pure((x, x * 3))

    def resume_all(k):
        def go(i, acc):
            if i == len(values):
                return pure(acc)
            return bind(k(values[i]), lambda r: go(i + 1, acc + [r]))

        return go(0, [])

    assert run(bind(shift(resume_all), ctx)) == [run(ctx(v)) for v in values]
