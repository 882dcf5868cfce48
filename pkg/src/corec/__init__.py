"""Lazy streams, corecursion schemes and multi-shot delimited control."""
from .control import (
    Cont,
    ContinuationError,
    Ctl,
    abort,
    bind,
    callcc,
    delay,
    fmap,
    pure,
    run,
    shift,
    throw,
)
from .schemes import Finished, Seed, coiter, coiter_eff, corecC, corecM, corecM_eff
from .streams import (
    EffStream,
    Stream,
    always,
    append,
    cons,
    count_down,
    count_up,
    lift,
    maps,
    repeat_fn,
    take,
    take_eff,
    zeroes,
)

__version__ = "0.1.0"
