"""Shared machinery for the shift/closure/splitting transformation tests."""

import random

from fengrao import Configuration, NumericalSemigroup, enumerate_amenable


def random_amenable_sets(
    sgp: NumericalSemigroup, m: int, sizes, count: int, seed: int
) -> list[Configuration]:
    """Sample (with replacement) from the full enumeration at each size."""
    rng = random.Random(seed)
    pools = [list(enumerate_amenable(sgp, m, r)) for r in sizes]
    out = []
    for _ in range(count):
        pool = pools[rng.randrange(len(pools))]
        out.append(pool[rng.randrange(len(pool))])
    return out


def visual_column(x: int, m: int, a: int, b: int) -> int:
    """Column of x in the planified helix cut at m + b.

    Ground offsets map to themselves; everything above the ground folds
    onto columns b .. a+b-1.
    """
    off = x - m
    return off if off < a + b else b + ((off - b) % a)


def find_splitting_column(a: int, b: int, config: Configuration):
    """(column, left part, right part) for the first empty splitting column."""
    m = config.base
    occupied = {visual_column(x, m, a, b) for x in config.elements}
    for col in range(1, a + b):
        if col in occupied:
            continue
        right = [x for x in config.elements if visual_column(x, m, a, b) > col]
        if right:
            left = [x for x in config.elements if visual_column(x, m, a, b) < col]
            return col, left, right
    return None
