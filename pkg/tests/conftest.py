"""Shared generators for the randomized suites (seeded, no global state)."""
from __future__ import annotations

import random

from wrapsurg import (
    MontesinosTangle,
    NotAKnotError,
    Slope,
    WrappedKnot,
    make_slope,
    make_wrapped,
)


def random_slope(rng: random.Random, max_num: int, max_den: int) -> Slope:
    while True:
        p = rng.randint(-max_num, max_num)
        q = rng.randint(1, max_den)
        if (p, q) != (0, 0):
            return make_slope(p, q)


def random_tangle(
    rng: random.Random, max_entries: int = 3, bound: int = 20
) -> MontesinosTangle:
    k = rng.randint(1, max_entries)
    return MontesinosTangle.from_slopes(
        [random_slope(rng, bound, bound) for _ in range(k)]
    )


def random_knot(
    rng: random.Random, max_entries: int = 3, bound: int = 20
) -> WrappedKnot:
    while True:
        tangle = random_tangle(rng, max_entries, bound)
        a = rng.randint(0, 1)
        try:
            return make_wrapped(a, tangle)
        except NotAKnotError:
            continue
