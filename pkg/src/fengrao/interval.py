"""Semigroups generated by an integer interval <a, a+1, ..., a+b>, 0 < b < a.

For these semigroups membership, divisor counts of ground subsets, and
the Feng-Rao numbers all have closed forms.  The skeleton:

* an integer ka + v with 0 <= v < a belongs to S iff v <= kb;
* the divisors a configuration gains over D(m) are two explicit
  parameter families, which collapse to ceiling sums for ground subsets;
* sums sum_{j=1..x} ceil((y-j)/b) have a closed form;
* every r decomposes uniquely as r = h + b*h*(h-1)/2 + k*h + j with
  -1 <= k <= b-1 and 0 < j <= h, which pins down the shadow of the
  "ordered" amenable sets; those are optimal, giving the closed form
  for E(r, S).

All ceilings are true integer ceilings; terms ceil((a-i)/b) with
i >= a vanish because a - i stays in (-b, 0] for i < a + b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .amenable import Configuration, is_amenable
from .divisors import DivisorSet, divisors_above
from .errors import (
    BaseTooSmall,
    InvalidInput,
    InvalidParams,
    NoOrderedAmenable,
    NotAmenable,
)
from .semigroup import NumericalSemigroup, from_generators


def _ceildiv(p: int, q: int) -> int:
    return -((-p) // q)


def _check_interval(a: int, b: int) -> None:
    if not 0 < b < a:
        raise InvalidParams(f"need 0 < b < a, got a={a}, b={b}")


@lru_cache(maxsize=None)
def interval_semigroup(a: int, b: int) -> NumericalSemigroup:
    """The numerical semigroup minimally generated by [a, a+b]."""
    _check_interval(a, b)
    return from_generators(range(a, a + b + 1))


@dataclass(frozen=True)
class IntervalSemigroup:
    """Parameter pair (a, b) with its induced numerical semigroup."""

    a: int
    b: int

    def __post_init__(self) -> None:
        _check_interval(self.a, self.b)

    @property
    def semigroup(self) -> NumericalSemigroup:
        return interval_semigroup(self.a, self.b)


def as_interval(sgp: NumericalSemigroup) -> tuple[int, int] | None:
    """(a, b) if the minimal generators form an interval with 0 < b < a."""
    gens = sgp.minimal_generators
    a, b = gens[0], gens[-1] - gens[0]
    if len(gens) == b + 1 and 0 < b < a:
        return a, b
    return None


def interval_contains(a: int, b: int, n: int) -> bool:
    """Membership of n in <a, ..., a+b>: with n = ka + v, true iff v <= kb."""
    _check_interval(a, b)
    if n < 0:
        return False
    k, v = divmod(n, a)
    return v <= k * b


def ceil_sum(x: int, y: int, b: int) -> int:
    """Closed form of sum_{j=1..x} ceil((y - j) / b).

    Writing y = cb + r with 0 <= r < b and k = floor((x - r) / b), the
    sum telescopes over blocks of b consecutive j into the two cases
    below (r nonzero / zero).
    """
    if x < 1 or y < 1 or b < 1:
        raise InvalidParams(f"need x, y, b >= 1, got x={x}, y={y}, b={b}")
    c, r = divmod(y, b)
    k = (x - r) // b
    if r != 0:
        return x * (c - k) + (k + 1) * (r - 1) + b * k * (k + 1) // 2
    return (x + 1) * (c - k) + b * k * (k + 1) // 2 - c


def _ceil_sum0(x: int, y: int, b: int) -> int:
    """ceil_sum extended by the empty sum at x = 0."""
    return 0 if x == 0 else ceil_sum(x, y, b)


@dataclass(frozen=True)
class HDecomposition:
    """The unique (h, k, j) with r = h + b*h*(h-1)/2 + k*h + j."""

    r: int
    h: int
    k: int
    j: int


def h_decompose(r: int, b: int) -> HDecomposition:
    """Split r against the block sizes h + b*h*(h-1)/2.

    h is found by stepping through blocks (r is desk scale, exactness
    beats root finding); the remainder s in [0, h*b] splits as k*h + j
    with 0 < j <= h, where s = 0 is encoded as k = -1, j = h.
    """
    if r < 1 or b < 1:
        raise InvalidParams(f"need r, b >= 1, got r={r}, b={b}")

    def block_start(q: int) -> int:
        return q + b * q * (q - 1) // 2

    h = 1
    while block_start(h + 1) <= r:
        h += 1
    s = r - block_start(h)
    if s == 0:
        k, j = -1, h
    else:
        k = (s + h - 1) // h - 1
        j = s - k * h
    return HDecomposition(r=r, h=h, k=k, j=j)


def ordered_shadow_size(a: int, b: int, r: int) -> int:
    """Shadow cardinality b(h-1) + k + 2 of an ordered set of size r.

    Nondecreasing in r; capped at nothing here, so values >= a + b mean
    the optimal shadows have outgrown the ground.
    """
    _check_interval(a, b)
    dec = h_decompose(r, b)
    return b * (dec.h - 1) + dec.k + 2


def rho_equality_predicted(a: int, b: int, r: int) -> bool:
    """Predicted E(r, S) = rho_r cases.

    True when either r lies in a run {b*sigma(p)+1, ..., b*sigma(p)+p+1}
    with sigma(p) = p(p+1)/2, p >= 0, before the optimal shadow covers
    every residue class mod a, or from the first r whose shadow does
    cover them all (size >= a) onward.
    """
    _check_interval(a, b)
    if ordered_shadow_size(a, b, r) >= a:
        return True
    p = 0
    while True:
        lo = b * p * (p + 1) // 2 + 1
        if lo > r:
            return False
        if r <= lo + p:
            return True
        p += 1


def interval_feng_rao_number(a: int, b: int, r: int) -> int:
    """E(r, <a, ..., a+b>) in closed form.

    With (h, k, j) the decomposition of r, the optimal shadow is the
    interval of size b(h-1) + k + 2; the sum is capped at a + b - 1 once
    that would reach the whole ground.
    """
    _check_interval(a, b)
    dec = h_decompose(r, b)
    width = b * (dec.h - 1) + dec.k + 1
    if width + 1 >= a + b:
        width = a + b - 1
    return r - 1 + _ceil_sum0(width, a, b)


def _offset_count(a: int, b: int, m: int, offsets: tuple[int, ...]) -> int:
    """Ceiling-sum divisor count of {m + i : i in offsets}; see below."""
    sgp = interval_semigroup(a, b)
    total = m + 1 - 2 * sgp.genus
    for prev, cur in zip(offsets, offsets[1:]):
        d = cur - prev
        total += (
            _ceil_sum0(cur, a + b, b)
            - _ceil_sum0(prev, a + b, b)
            - _ceil_sum0(d, d, b)
        )
    return total


def interval_shadow_divisor_count(
    a: int, b: int, m: int, offsets: tuple[int, ...] | list[int], *, check: bool = True
) -> int:
    """#D(m, m+i_1, ..., m+i_t) for a ground subset, by formula alone.

    Offsets must start at 0, increase strictly and stay below a + b.
    The count accumulates, per consecutive offset pair, the number of
    fresh divisors sum_{j=i_prev+1..i_cur} ceil((a+b-j)/b) - ceil((i_cur-j)/b),
    each block evaluated by ceil_sum.  The formula counts divisors only
    for amenable sets, which is verified unless ``check`` is disabled
    (the raw value is still defined and is what the interval-minimality
    inequality is about).
    """
    _check_interval(a, b)
    offs = tuple(offsets)
    if not offs or offs[0] != 0:
        raise InvalidParams("offsets must be nonempty and start at 0")
    if any(x >= y for x, y in zip(offs, offs[1:])) or offs[-1] >= a + b:
        raise InvalidParams("offsets must increase strictly and stay below a+b")
    sgp = interval_semigroup(a, b)
    if m < 2 * sgp.conductor - 1:
        raise BaseTooSmall(f"base {m} is below 2c-1 = {2 * sgp.conductor - 1}")
    if check:
        config = Configuration(base=m, elements=tuple(m + i for i in offs))
        if not is_amenable(sgp, config):
            raise NotAmenable(f"offsets {offs} do not give an amenable set")
    return _offset_count(a, b, m, offs)


def interval_extra_divisors(a: int, b: int, m: int, q: int, j: int) -> DivisorSet:
    """D(m, m + qa + j) minus D(m) as its two explicit parameter families.

    The new divisors are the m - (ka + v) with 0 <= v < a, kb < v (so the
    difference is a gap) and m + qa + j - (m - (ka + v)) in S; splitting on
    whether v + j wraps past a gives the two disjoint k-ranges below.
    """
    _check_interval(a, b)
    if q < 0 or not 0 <= j <= a - 1:
        raise InvalidParams(f"need q >= 0 and 0 <= j < a, got q={q}, j={j}")
    sgp = interval_semigroup(a, b)
    if m < 2 * sgp.conductor - 1:
        raise BaseTooSmall(f"base {m} is below 2c-1 = {2 * sgp.conductor - 1}")

    found: list[int] = []
    for v in range(0, a - j):
        for k in range(_ceildiv(v + j, b) - q, _ceildiv(v, b)):
            found.append(m - (k * a + v))
    for v in range(a - j, a):
        for k in range(_ceildiv(v + j - (a + b), b) - q, _ceildiv(v, b)):
            found.append(m - (k * a + v))
    return DivisorSet(elements=tuple(sorted(found)), source=(m, m + q * a + j))


def ordered_amenable_set(a: int, b: int, m: int, r: int) -> Configuration:
    """The explicit ordered (S, m, r)-amenable set, when one exists.

    Three-part union: the divisors of m + (h-1)(a+b) from m on, then k
    full columns of height h at offsets b(h-1)+1 .. b(h-1)+k, then j
    elements in the column at offset b(h-1)+k+1.  Requires
    b(h-1) + k + 1 < a + b - 1; past that bound the optimal shadows fill
    the ground and no ordered set of size r exists.
    """
    _check_interval(a, b)
    dec = h_decompose(r, b)
    edge = b * (dec.h - 1) + dec.k + 1
    if edge >= a + b - 1:
        raise NoOrderedAmenable(
            f"r={r} needs shadow edge {edge} < a+b-1 = {a + b - 1}"
        )
    sgp = interval_semigroup(a, b)
    if m < 2 * sgp.conductor - 1:
        raise BaseTooSmall(f"base {m} is below 2c-1 = {2 * sgp.conductor - 1}")

    elements = set(divisors_above(sgp, m + (dec.h - 1) * (a + b), m).elements)
    for v in range(b * (dec.h - 1) + 1, b * (dec.h - 1) + dec.k + 1):
        for u in range(dec.h):
            elements.add(m + u * a + v)
    for u in range(dec.j):
        elements.add(m + u * a + edge)
    return Configuration(base=m, elements=tuple(sorted(elements)))


@dataclass(frozen=True)
class WagonPivot:
    """Rightmost occupied column of a configuration and its top element."""

    wagon: tuple[int, ...]
    pivot: int


def wagon_pivot(a: int, b: int, config: Configuration) -> WagonPivot:
    """Wagon and pivot of a configuration over <a, ..., a+b>.

    Columns are residue classes counted from the cut at m + b; only
    elements >= m + b pick the rightmost index j0.  When the whole
    configuration sits below m + b its maximum plays the pivot role.
    """
    _check_interval(a, b)
    if not config.elements:
        raise InvalidInput("wagon of an empty configuration")
    m = config.base
    uppers = [x for x in config.elements if x >= m + b]
    if not uppers:
        top = config.elements[-1]
        return WagonPivot(wagon=(top,), pivot=top)
    j0 = max((x - m - b) % a for x in uppers)
    wagon = tuple(x for x in config.elements if (x - m - b) % a == j0)
    return WagonPivot(wagon=wagon, pivot=wagon[-1])


def is_ordered_amenable(a: int, b: int, config: Configuration) -> bool:
    """Orderedness check straight from the definition.

    The shadow has to be an interval {m, ..., m+t} with t < a+b-1, the
    set amenable, and the only element addable without touching the
    ground has to be pivot + a (a = rho_2 here).
    """
    _check_interval(a, b)
    sgp = interval_semigroup(a, b)
    if not config.elements or not is_amenable(sgp, config):
        return False
    m = config.base
    width = a + b
    shadow = [x for x in config.elements if x < m + width]
    t = len(shadow) - 1
    if t >= width - 1 or shadow != list(range(m, m + t + 1)):
        return False
    pivot = wagon_pivot(a, b, config).pivot
    members = set(config.elements)
    top = config.elements[-1]
    for x in range(m + width, top + a + 1):
        if x in members:
            continue
        if all(x - n < m or x - n in members for n in sgp.minimal_generators):
            if x != pivot + a:
                return False
    return True
