"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All tolerances are pinned here; the exact-arithmetic criteria use no
tolerance at all.
"""

import functools
import json
import time
from fractions import Fraction

from tridigits import (
    DividingDynamics,
    classify_base,
    digit_histogram,
    empirical_frequencies,
    enumerate_cases,
    fit_power_law,
    quadratic_diagonal,
    render_transcript,
    residue_profile,
    simulate,
    tri_exact,
    tri_mod,
    verify_case,
)
from tridigits.cli import main


def criterion(number: int, description: str):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number} FAIL: {description}")
                raise
            print(f"ACCEPTANCE {number} PASS: {description}")

        return wrapper

    return decorate


@criterion(1, "base-10 frequency table is exact: {0,1,5,6}->1/5, {3,8}->1/10, rest 0")
def test_criterion_1_base10_frequencies(capsys):
    start = time.perf_counter()
    profile = residue_profile(10)
    expected = {
        0: Fraction(1, 5), 1: Fraction(1, 5), 2: Fraction(0), 3: Fraction(1, 10),
        4: Fraction(0), 5: Fraction(1, 5), 6: Fraction(1, 5), 7: Fraction(0),
        8: Fraction(1, 10), 9: Fraction(0),
    }
    assert profile.frequency == expected

    code = main(["residues", "--base", "10", "--format", "json"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    assert code == 0
    doc = json.loads(out)
    exact = {entry["digit"]: entry["exact"] for entry in doc["frequencies"]}
    assert exact == {
        0: "1/5", 1: "1/5", 2: "0/1", 3: "1/10", 4: "0/1",
        5: "1/5", 6: "1/5", 7: "0/1", 8: "1/10", 9: "0/1",
    }
    assert elapsed < 1.0


@criterion(2, "bases {3,5,6,7,9,10} gappy and {4,8,16} non-gappy")
def test_criterion_2_gap_classification():
    start = time.perf_counter()
    for base in (3, 5, 6, 7, 9, 10):
        assert classify_base(base).gappy, f"base {base} should be gappy"
    for base in (4, 8, 16):
        assert not classify_base(base).gappy, f"base {base} should be non-gappy"
    assert time.perf_counter() - start < 1.0


@criterion(3, "base-3 and base-4 transcripts match the stated congruences")
def test_criterion_3_statements():
    t3 = enumerate_cases(3)
    text3 = render_transcript(t3)
    congruences = [line for line in text3.splitlines() if line.startswith("S_")]
    assert congruences == [
        "S_{3k+0} == 0 (mod 3) [all k]",
        "S_{3k+1} == 1 (mod 3) [all k]",
        "S_{3k+2} == 0 (mod 3) [all k]",
    ]
    assert t3.derived_missing == (2,)
    for case in t3.cases:
        assert verify_case(case, 1000)

    t4 = enumerate_cases(4)
    text4 = render_transcript(t4)
    for line in (
        "S_{4k+0} == 0 (mod 4) [k even]",
        "S_{4k+0} == 2 (mod 4) [k odd]",
        "S_{4k+1} == 1 (mod 4) [k even]",
        "S_{4k+1} == 3 (mod 4) [k odd]",
    ):
        assert line in text4
    assert t4.derived_missing == ()
    for case in t4.cases:
        assert verify_case(case, 1000)


@criterion(4, "tri_mod equals naive cumulative-sum residues for n<=1e5, bases 2..64")
def test_criterion_4_oracle_equivalence():
    start = time.perf_counter()
    limit = 100_000
    cumulative = [0] * (limit + 1)
    running = 0
    for n in range(1, limit + 1):
        running += n
        cumulative[n] = running
    for base in range(2, 65):
        actual = [tri_mod(n, base) for n in range(limit + 1)]
        expected = [s % base for s in cumulative]
        assert actual == expected, f"mismatch at base {base}"
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0


@criterion(5, "quadratic diagonal starts 1,3,6,10,15,21,28,36 and equals tri_exact")
def test_criterion_5_pascal_bridge():
    assert quadratic_diagonal(8) == [1, 3, 6, 10, 15, 21, 28, 36]
    diagonal = quadratic_diagonal(1000)
    for t, value in enumerate(diagonal, start=1):
        assert value == tri_exact(t)


@criterion(6, "growth corollaries: triangular totals, exponents 2 and 1, base-10 gaps")
def test_criterion_6_growth():
    linear = simulate(DividingDynamics.linear(), 10_000)
    for t in range(1, 10_001):
        assert linear.total[t - 1] == tri_exact(t)

    fit = fit_power_law(linear, (500, 1000))
    assert abs(fit.exponent - 2.0) <= 0.05

    constant = simulate(DividingDynamics.constant(1), 1000)
    constant_fit = fit_power_law(constant, (500, 1000))
    assert abs(constant_fit.exponent - 1.0) <= 1e-6

    hist = digit_histogram(linear, 10)
    assert all(hist.counts[d] == 0 for d in (2, 4, 7, 9))


@criterion(7, "empirical frequencies: deviation < 0.005 at 1e5, exactly 0 at multiples of 20")
def test_criterion_7_empirical_convergence(capsys):
    code = main(["freq", "--base", "10", "--count", "100000", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert all(entry["deviation"] < 0.005 for entry in doc["digits"])

    profile = residue_profile(10)
    for count in (20, 740, 100_000):
        emp = empirical_frequencies(10, count)
        for d in range(10):
            assert Fraction(emp.counts[d], count) == profile.frequency[d]
