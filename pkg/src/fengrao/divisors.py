"""Divisor sets D(x) and divisor counts of configurations.

alpha in S divides x in S when x - alpha is again in S, so
D(x) = S intersect (x - S).  Only elements of S up to x matter, which
keeps the computation to a single pass over S_x.  Divisor sets are kept
as sorted tuples: unions, counts and interval filters are then merge
style and deterministic, which matters because the minimization in the
distance search compares cardinalities constantly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidRange, NotElement
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class DivisorSet:
    """Sorted divisors together with the element(s) they divide."""

    elements: tuple[int, ...]
    source: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, n: int) -> bool:
        return n in set(self.elements)


def divisors(sgp: NumericalSemigroup, x: int) -> DivisorSet:
    """D(x) = {s in S | x - s in S}, ascending."""
    if not sgp.contains(x):
        raise NotElement(f"{x} is not an element of the semigroup")
    divs = tuple(s for s in sgp.elements_up_to(x) if sgp.contains(x - s))
    return DivisorSet(elements=divs, source=(x,))


def divisors_of_set(sgp: NumericalSemigroup, elements: Iterable[int]) -> DivisorSet:
    """Union of the divisor sets of the given semigroup elements."""
    source = tuple(sorted(set(elements)))
    if not source:
        return DivisorSet(elements=(), source=())
    union: set[int] = set()
    for x in source:
        union.update(divisors(sgp, x).elements)
    return DivisorSet(elements=tuple(sorted(union)), source=source)


def nu(sgp: NumericalSemigroup, elements: Iterable[int]) -> int:
    """Number of divisors of a configuration (cardinality of the union)."""
    return len(divisors_of_set(sgp, elements))


def divisors_above(sgp: NumericalSemigroup, y: int, x: int) -> DivisorSet:
    """D(y) cut to [x, infinity), computed as (y - S) cut to [x, infinity).

    Valid for c <= x <= y; in that range every difference y - s that is
    >= x is automatically an element, so S_y is never enumerated.
    """
    if not sgp.contains(y):
        raise NotElement(f"{y} is not an element of the semigroup")
    if not sgp.conductor <= x <= y:
        raise InvalidRange(
            f"need conductor {sgp.conductor} <= x <= y, got x={x}, y={y}"
        )
    divs = tuple(y - s for s in reversed(sgp.elements_up_to(y - x)))
    return DivisorSet(elements=divs, source=(y,))
