"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria complete; every criterion also enforces its runtime budget.
"""

import io
import contextlib
import random
import time
from pathlib import Path

import fengrao.cli as cli
from fengrao import (
    Configuration,
    brute_force_distance,
    ceil_sum,
    divisors,
    enumerate_amenable,
    feng_rao_distance,
    feng_rao_number,
    from_generators,
    interval_feng_rao_number,
    interval_semigroup,
    interval_shadow_divisor_count,
    is_amenable,
    is_ordered_amenable,
    nu,
    ordered_amenable_set,
    rho_equality_predicted,
    smallest_asymptotic_base,
    wagon_pivot,
)
from fengrao.interval import _ceildiv, h_decompose

from corpus import base_point, corpus_semigroups
from transform_helpers import random_amenable_sets

GOLDEN = Path(__file__).parent / "golden"


def run_criterion(number, name, budget_s, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"[criterion {number:02d}] {name}: FAIL ({elapsed:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    print(f"[criterion {number:02d}] {name}: PASS ({elapsed:.2f}s, budget {budget_s}s)")
    assert elapsed < budget_s


def test_criterion_01_divisors_golden():
    def body():
        s = from_generators([9, 13, 15])
        assert divisors(s, 60).elements == (
            0, 9, 15, 18, 24, 27, 30, 33, 36, 42, 45, 51, 60,
        )

    run_criterion(1, "divisors golden <9,13,15> at 60", 1, body)


def test_criterion_02_counting_law():
    def body():
        pool = corpus_semigroups(max_multiplicity=13)
        assert len(pool) >= 20
        for s in pool:
            m = 2 * s.conductor - 1
            for x in range(m, m + 2 * s.largest_generator + 1):
                if s.contains(x):
                    assert nu(s, [x]) == x + 1 - 2 * s.genus, (s.minimal_generators, x)

    run_criterion(2, "counting law nu({x}) = x+1-2g", 10, body)


def test_criterion_03_oracle_equivalence():
    def body():
        for s in corpus_semigroups(max_multiplicity=9):
            m = base_point(s)
            for r in range(1, 6):
                generic = feng_rao_distance(s, m, r).delta
                brute = brute_force_distance(s, m, r).delta
                assert generic == brute, (s.minimal_generators, r)

    run_criterion(3, "generic algorithm == brute-force oracle", 300, body)


def test_criterion_04_formula_vs_generic():
    def body():
        for a in range(2, 13):
            for b in range(1, a):
                s = interval_semigroup(a, b)
                for r in range(1, 13):
                    formula = interval_feng_rao_number(a, b, r)
                    generic = feng_rao_number(s, r).e_number
                    assert formula == generic, (a, b, r)

    run_criterion(4, "closed form == generic, b < a <= 12, r <= 12", 600, body)


def test_criterion_05_hermitian_like():
    def body():
        for a in range(3, 9):
            s = interval_semigroup(a, 1)
            for r in range(1, 11):
                assert feng_rao_number(s, r).e_number == s.rho(r), (a, r)

    run_criterion(5, "E(<a,a+1>, r) = rho_r", 60, body)


def test_criterion_06_ordered_amenable_optimality():
    def body():
        for a, b in [(4, 1), (5, 2), (7, 3), (9, 4)]:
            s = interval_semigroup(a, b)
            m = smallest_asymptotic_base(s)
            r = 1
            while True:
                d = h_decompose(r, b)
                if b * (d.h - 1) + d.k + 1 >= a + b - 1:
                    break
                config = ordered_amenable_set(a, b, m, r)
                assert nu(s, config.elements) == feng_rao_distance(s, m, r).delta, (a, b, r)
                r += 1
            assert r > 1

    run_criterion(6, "ordered amenable sets are optimal", 120, body)


def test_criterion_07_ceiling_sum_closed_form():
    def body():
        for b in range(1, 21):
            for y in range(1, 201):
                running = 0
                for x in range(1, 201):
                    running += _ceildiv(y - x, b)
                    assert ceil_sum(x, y, b) == running, (x, y, b)

    run_criterion(7, "ceil_sum closed form == direct loop", 5, body)


def _ground_amenable_offset_pool(a, b):
    s = interval_semigroup(a, b)
    m = smallest_asymptotic_base(s)
    pool = []
    for r in range(1, a + b + 1):
        for config in enumerate_amenable(s, m, r):
            offsets = config.offsets()
            if offsets[-1] < a + b:
                pool.append(offsets)
    return pool


def test_criterion_08_shadow_count_formulas():
    def body():
        for a, b in [(5, 2), (9, 4)]:
            s = interval_semigroup(a, b)
            m = smallest_asymptotic_base(s)
            pool = _ground_amenable_offset_pool(a, b)
            rng = random.Random(1000 * a + b)
            for _ in range(200):
                offsets = pool[rng.randrange(len(pool))]
                formula = interval_shadow_divisor_count(a, b, m, offsets)
                assert formula == nu(s, [m + i for i in offsets]), (a, b, offsets)

    run_criterion(8, "shadow divisor-count formulas == enumeration", 60, body)


def test_criterion_09_interval_shadow_minimality():
    def body():
        for a, b in [(5, 2), (9, 4)]:
            m = smallest_asymptotic_base(interval_semigroup(a, b))
            rng = random.Random(77 * a + b)
            for _ in range(200):
                size = rng.randrange(0, a + b - 1)
                offsets = (0, *sorted(rng.sample(range(1, a + b), size)))
                loose = interval_shadow_divisor_count(a, b, m, offsets, check=False)
                packed = interval_shadow_divisor_count(
                    a, b, m, range(len(offsets)), check=False
                )
                assert loose >= packed, (a, b, offsets)

    run_criterion(9, "interval shadows minimize the formula count", 30, body)


def test_criterion_10_shift_closure_suite():
    def body():
        checked = 0
        # four shift/closure transformations on random amenable sets
        for gens in [(4, 5), (5, 6, 7), (4, 6, 7), (9, 13, 15)]:
            s = from_generators(gens)
            m = 2 * s.conductor
            for config in random_amenable_sets(s, m, (2, 3, 4, 5), 100, seed=sum(gens)):
                elems = config.elements
                assert is_amenable(
                    s, Configuration(base=m + 1, elements=tuple(x + 1 for x in elems))
                )
                assert is_amenable(
                    s, Configuration(base=m - 1, elements=tuple(x - 1 for x in elems))
                )
                assert is_amenable(s, Configuration(base=m - 1, elements=(m - 1, *elems)))
                if len(elems) > 1:
                    assert is_amenable(s, Configuration(base=m, elements=elems[:-1]))
                checked += 1
        # pivot removal on ordered amenable sets
        rng = random.Random(4242)
        pairs = [(4, 1), (5, 2), (7, 3), (9, 4)]
        while checked < 500:
            a, b = pairs[rng.randrange(4)]
            m = smallest_asymptotic_base(interval_semigroup(a, b))
            r = rng.randrange(2, 13)
            d = h_decompose(r, b)
            if b * (d.h - 1) + d.k + 1 >= a + b - 1:
                continue
            config = ordered_amenable_set(a, b, m, r)
            pivot = wagon_pivot(a, b, config).pivot
            rest = tuple(x for x in config.elements if x != pivot)
            assert is_ordered_amenable(a, b, Configuration(base=m, elements=rest))
            checked += 1
        assert checked == 500

    run_criterion(10, "shift/closure/pivot transformation suite, 500 samples", 60, body)


def test_criterion_11_rho_equality_cases():
    def body():
        for a, b in [(4, 1), (5, 2), (7, 3)]:
            s = interval_semigroup(a, b)
            actual = {
                r
                for r in range(1, 13)
                if interval_feng_rao_number(a, b, r) == s.rho(r)
            }
            predicted = {r for r in range(1, 13) if rho_equality_predicted(a, b, r)}
            assert actual == predicted, (a, b, sorted(actual), sorted(predicted))

    run_criterion(11, "E = rho exactly on the predicted r-sets", 60, body)


def test_criterion_12_cli_goldens():
    def body():
        commands = {
            "divisors_9_13_15_x60": ["divisors", "--gens", "9,13,15", "--x", "60"],
            "number_4_1_r1to5_all": [
                "number", "--interval", "4,1", "--r", "1..5",
                "--method", "all", "--no-timing",
            ],
            "grid_a6_b3_r8": ["grid", "--amax", "6", "--bmax", "3", "--rmax", "8"],
        }
        for name, argv in commands.items():
            for fmt in ("csv", "json"):
                buf = io.StringIO()
                with contextlib.redirect_stdout(buf):
                    code = cli.main(argv + ["--format", fmt])
                assert code == 0
                expected = (GOLDEN / f"{name}.{fmt}").read_bytes()
                assert buf.getvalue().encode() == expected, (name, fmt)

    run_criterion(12, "CLI goldens byte-exact (csv and json)", 10, body)
