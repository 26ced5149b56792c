"""Numerical semigroups: canonical construction and basic invariants.

A numerical semigroup S is a cofinite submonoid of the non-negative
integers.  Everything downstream (divisor sets, amenable sets, Feng-Rao
distances) queries membership heavily, so construction eagerly computes
the least element of S in every residue class modulo the multiplicity;
membership is then a single table lookup.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidInput, NotNumerical

# Desk-scale guard: inputs this large are almost certainly a bug upstream.
_MAX_GENERATOR = 2**31


def _least_in_residues(gens: Sequence[int], mult: int) -> list[int]:
    """Least element of <gens> in each residue class mod mult (Dijkstra)."""
    dist: list[int] = [-1] * mult
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    while heap:
        d, v = heapq.heappop(heap)
        if d != dist[v]:
            continue
        for g in gens:
            nv = (v + g) % mult
            nd = d + g
            if dist[nv] < 0 or nd < dist[nv]:
                dist[nv] = nd
                heapq.heappush(heap, (nd, nv))
    return dist


@dataclass(frozen=True)
class NumericalSemigroup:
    """Canonical form of a numerical semigroup.

    Build instances with :func:`from_generators`; the constructor assumes
    all fields are already consistent.
    """

    minimal_generators: tuple[int, ...]
    multiplicity: int
    conductor: int
    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    small_elements: tuple[int, ...]
    # least element of S in each residue class mod multiplicity
    _least: tuple[int, ...] = field(repr=False)

    def contains(self, n: int) -> bool:
        """True iff n is an element of the semigroup."""
        if n < 0:
            return False
        return n >= self._least[n % self.multiplicity]

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def rho(self, i: int) -> int:
        """i-th smallest element (1-based): rho(1) = 0, rho(2) = multiplicity."""
        if i < 1:
            raise InvalidInput(f"element index must be >= 1, got {i}")
        small = self.small_elements
        if i <= len(small):
            return small[i - 1]
        # beyond the conductor the elements are consecutive integers
        return self.genus + i - 1

    def elements_up_to(self, x: int) -> list[int]:
        """All elements of S that are <= x, ascending; empty for x < 0."""
        if x < 0:
            return []
        c = self.conductor
        if x < c:
            return [s for s in self.small_elements if s <= x]
        return list(self.small_elements[:-1]) + list(range(c, x + 1))

    @property
    def largest_generator(self) -> int:
        return self.minimal_generators[-1]


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Construct the numerical semigroup generated by ``gens``.

    The generator list is minimalized (generators that are sums of other
    elements are dropped).  Raises InvalidInput for an empty or non-positive
    list and NotNumerical when gcd(gens) != 1.
    """
    unique = sorted(set(gens))
    if not unique:
        raise InvalidInput("generator list is empty")
    if unique[0] < 1:
        raise InvalidInput(f"generators must be positive, got {unique[0]}")
    if unique[-1] > _MAX_GENERATOR:
        raise InvalidInput(f"generator {unique[-1]} exceeds the 2^31 guard")
    if gcd(*unique) != 1:
        raise NotNumerical(f"gcd of generators is {gcd(*unique)}, not 1")

    mult = unique[0]
    least = _least_in_residues(unique, mult)
    conductor = max(least) - mult + 1
    genus = sum(d // mult for d in least)

    gaps: list[int] = []
    for d in least:
        gaps.extend(range(d - mult, 0, -mult))
    gaps.sort()

    gap_set = set(gaps)
    small = tuple(n for n in range(conductor + 1) if n not in gap_set)

    def is_element(n: int) -> bool:
        return n >= 0 and n >= least[n % mult]

    def is_reducible(g: int) -> bool:
        return any(
            is_element(s) and is_element(g - s) for s in range(mult, g // 2 + 1)
        )

    minimal = tuple(g for g in unique if not is_reducible(g))

    sgp = NumericalSemigroup(
        minimal_generators=minimal,
        multiplicity=mult,
        conductor=conductor,
        frobenius=conductor - 1,
        genus=genus,
        gaps=tuple(gaps),
        small_elements=small,
        _least=tuple(least),
    )
    assert sgp.conductor <= 2 * sgp.genus
    return sgp
