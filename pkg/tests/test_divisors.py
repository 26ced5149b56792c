import random

import pytest

from fengrao import (
    InvalidRange,
    NotElement,
    divisors,
    divisors_above,
    divisors_of_set,
    from_generators,
    nu,
)

from corpus import CORPUS, base_point, corpus_semigroups

FIG_DIVISORS_60 = (0, 9, 15, 18, 24, 27, 30, 33, 36, 42, 45, 51, 60)

# Divisors of {199, 229, 235, 247} in <19..23> that are >= 189 (figure data).
FIG_AMENABLE = (
    tuple(range(189, 198)) + (199,) + tuple(range(201, 211))
    + tuple(range(212, 217)) + tuple(range(224, 230)) + (235, 247)
)


def brute_divisors(sgp, x):
    return [p for p in range(x + 1) if sgp.contains(p) and sgp.contains(x - p)]


def test_figure_divisors_of_60():
    s = from_generators([9, 13, 15])
    d = divisors(s, 60)
    assert d.elements == FIG_DIVISORS_60
    assert len(d) == 13


def test_divisors_trivial_cases():
    s = from_generators([9, 13, 15])
    assert divisors(s, 0).elements == (0,)
    assert divisors(s, 9).elements == (0, 9)
    with pytest.raises(NotElement):
        divisors(s, 47)


def test_divisors_symmetry():
    s = from_generators([9, 13, 15])
    for x in (60, 48, 95):
        d = set(divisors(s, x).elements)
        assert all((x - a) in d for a in d)


@pytest.mark.parametrize("gens", [g for g in CORPUS if g[0] <= 9])
def test_divisors_against_double_loop(gens):
    s = from_generators(gens)
    for x in range(2 * s.conductor + 2 * s.largest_generator + 1):
        if s.contains(x):
            assert list(divisors(s, x).elements) == brute_divisors(s, x)


def test_divisor_closure():
    # s in D(x) implies D(s) subset of D(x)
    s = from_generators([5, 7, 9])
    for x in (35, 40, 52):
        dx = set(divisors(s, x).elements)
        for d in dx:
            assert set(divisors(s, d).elements) <= dx


def test_divisors_of_set_singleton_matches():
    s = from_generators([9, 13, 15])
    assert divisors_of_set(s, [60]).elements == divisors(s, 60).elements


def test_figure_amenable_divisor_union():
    s = from_generators(range(19, 24))
    d = divisors_of_set(s, [235, 199, 247, 229])
    assert tuple(x for x in d.elements if x >= 189) == FIG_AMENABLE


def test_divisors_of_set_consecutive_pair():
    # direct union against the consecutive-shadow counting formula
    s = from_generators([4, 5])
    m = base_point(s)
    a, b = 4, 1
    assert nu(s, [m, m + 1]) == (m + 1 - 2 * s.genus) + -(-(a + b - 1) // b)


def test_divisor_set_contains_zero_and_sources():
    s = from_generators([9, 13, 15])
    for source in ([60], [60, 95], [95, 96, 108]):
        d = divisors_of_set(s, source)
        assert 0 in d
        assert all(x in d for x in source)
        assert d.source == tuple(sorted(source))


def test_nu_values():
    s = from_generators([9, 13, 15])
    assert nu(s, [60]) == 13
    assert nu(s, [0]) == 1
    assert nu(s, [95]) == 95 + 1 - 2 * 24


def test_monotone_under_inclusion():
    s = from_generators([5, 6, 7])
    rng = random.Random(7)
    m = base_point(s)
    for _ in range(50):
        small = sorted(rng.sample(range(m, m + 25), 3))
        big = sorted(set(small) | {rng.randrange(m, m + 25)})
        assert set(divisors_of_set(s, small).elements) <= set(
            divisors_of_set(s, big).elements
        )


def test_counting_law_spot():
    # nu({x}) = x + 1 - 2g from 2c-1 on
    for s in corpus_semigroups(max_multiplicity=9):
        m = base_point(s)
        for x in (m, m + 1, m + s.largest_generator):
            assert nu(s, [x]) == x + 1 - 2 * s.genus


def test_divisors_above_golden():
    s = from_generators([9, 13, 15])
    assert divisors_above(s, 60, 48).elements == (51, 60)
    assert divisors_above(s, 60, 60).elements == (60,)
    with pytest.raises(InvalidRange):
        divisors_above(s, 60, 30)  # 30 < conductor
    with pytest.raises(InvalidRange):
        divisors_above(s, 60, 61)
    with pytest.raises(NotElement):
        divisors_above(s, 47, 47)


def test_divisors_above_matches_filter():
    rng = random.Random(11)
    pool = corpus_semigroups(max_multiplicity=13)
    for _ in range(100):
        s = rng.choice(pool)
        c = s.conductor
        x = rng.randrange(c, c + 40)
        y = rng.randrange(x, x + 40)
        expected = tuple(d for d in divisors(s, y).elements if d >= x)
        assert divisors_above(s, y, x).elements == expected
