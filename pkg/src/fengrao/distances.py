"""Generalized Feng-Rao distances and Feng-Rao numbers.

The r-th Feng-Rao distance of S at m is the least number of divisors of
an r-element configuration starting at or above m.  For m >= 2c-1 an
optimal configuration can always be chosen amenable, the count only
depends on the shadow, and delta^r(m) = m + 1 - 2g + E(S, r) with E the
r-th Feng-Rao number, so E is evaluated once at the smallest admissible
base.  A no-theory exhaustive search over all r-subsets serves as the
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .amenable import Configuration, shadow_representatives
from .divisors import divisors
from .errors import BaseTooSmall, InvalidInput, NotElement, SearchSpaceTooLarge
from .semigroup import NumericalSemigroup

DEFAULT_SUBSET_CAP = 50_000_000


@dataclass(frozen=True)
class FengRaoResult:
    """Outcome of a distance or Feng-Rao-number computation."""

    generators: tuple[int, ...]
    m: int
    r: int
    delta: int
    e_number: int
    method: str
    witness: Configuration | None

    def __post_init__(self) -> None:
        assert self.witness is None or len(self.witness) == self.r


def _check_args(sgp: NumericalSemigroup, m: int, r: int) -> None:
    if r < 1:
        raise InvalidInput(f"configuration size must be >= 1, got {r}")
    if not sgp.contains(m):
        raise NotElement(f"{m} is not an element of the semigroup")
    if m < 2 * sgp.conductor - 1:
        raise BaseTooSmall(
            f"base {m} is below 2c-1 = {2 * sgp.conductor - 1}; the identity "
            "delta(m) = m + 1 - 2g + E is only guaranteed from there on"
        )


def smallest_asymptotic_base(sgp: NumericalSemigroup) -> int:
    """Least element where delta^r(m) = m + 1 - 2g + E(S, r) is guaranteed."""
    return max(2 * sgp.conductor - 1, 0)


def feng_rao_distance(sgp: NumericalSemigroup, m: int, r: int) -> FengRaoResult:
    """delta^r(m) by minimizing over one amenable set per shadow.

    The divisor count of an amenable set M with shadow L splits as
    #D(M) = #(M \\ L) + #D(L), so the ground divisor sets are computed
    once and each representative costs one union of those.
    """
    _check_args(sgp, m, r)
    width = sgp.largest_generator
    ground_divs = [frozenset(divisors(sgp, m + i).elements) for i in range(width)]

    best: int | None = None
    witness: Configuration | None = None
    for config in shadow_representatives(sgp, m, r):
        shadow_offsets = [x - m for x in config.elements if x - m < width]
        union: set[int] = set()
        for i in shadow_offsets:
            union |= ground_divs[i]
        count = (r - len(shadow_offsets)) + len(union)
        if best is None or count < best:
            best = count
            witness = config
    assert best is not None and witness is not None
    return FengRaoResult(
        generators=sgp.minimal_generators,
        m=m,
        r=r,
        delta=best,
        e_number=best - (m + 1 - 2 * sgp.genus),
        method="generic",
        witness=witness,
    )


def feng_rao_number(sgp: NumericalSemigroup, r: int) -> FengRaoResult:
    """E(S, r), evaluated as delta^r at the smallest asymptotic base."""
    return feng_rao_distance(sgp, smallest_asymptotic_base(sgp), r)


def brute_force_distance(
    sgp: NumericalSemigroup,
    m: int,
    r: int,
    max_subsets: int = DEFAULT_SUBSET_CAP,
) -> FengRaoResult:
    """Exact delta^r(m) by enumerating every r-subset of S in [m, m + rho_r].

    No amenability filtering: this is the independent oracle for
    feng_rao_distance.  The window is enough because some optimal
    configuration satisfies m_i <= m + rho_i.  Raises SearchSpaceTooLarge
    when the number of candidate subsets exceeds ``max_subsets``.
    """
    _check_args(sgp, m, r)
    candidates = range(m + 1, m + sgp.rho(r) + 1)  # every integer >= m is in S
    total = comb(len(candidates), r - 1)
    if total > max_subsets:
        raise SearchSpaceTooLarge(
            f"{total} candidate subsets exceed the cap of {max_subsets}"
        )

    base_divs = frozenset(divisors(sgp, m).elements)
    div_of = {x: frozenset(divisors(sgp, x).elements) for x in candidates}

    best: int | None = None
    witness: tuple[int, ...] | None = None
    for combo in combinations(candidates, r - 1):
        union = set(base_divs)
        for x in combo:
            union |= div_of[x]
        if best is None or len(union) < best:
            best = len(union)
            witness = (m,) + combo
    assert best is not None and witness is not None
    return FengRaoResult(
        generators=sgp.minimal_generators,
        m=m,
        r=r,
        delta=best,
        e_number=best - (m + 1 - 2 * sgp.genus),
        method="brute-force",
        witness=Configuration(base=m, elements=witness),
    )
