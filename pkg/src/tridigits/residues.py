"""Which units digits triangular numbers can end with, per base.

The sequence n -> tri_mod(n, L) repeats with period dividing 2L, so the
window n in [0, 2L) decides everything: the reachable digit set, the
exact frequency of each digit, and the minimal period. Frequencies are
kept as exact rationals; no digit's share is ever approximated.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .core import tri_mod, validate_base

DEFAULT_SAMPLE_SIZE = 100_000


@dataclass(frozen=True)
class ResidueProfile:
    """Exact units-digit distribution of triangular numbers in one base."""

    base: int
    period: int
    reachable: frozenset[int]
    frequency: dict[int, Fraction]  # entry for every digit 0..base-1


@dataclass(frozen=True)
class GapClassification:
    base: int
    gappy: bool
    missing_digits: tuple[int, ...]


@dataclass(frozen=True)
class EmpiricalFrequencies:
    """Observed units-digit counts over a finite sample."""

    base: int
    sample_size: int
    counts: dict[int, int]  # entry for every digit 0..base-1

    def proportion(self, digit: int) -> Fraction:
        return Fraction(self.counts[digit], self.sample_size)


def fundamental_window(base: int) -> list[int]:
    """Residues tri_mod(n, base) for n in [0, 2*base)."""
    validate_base(base)
    return [tri_mod(n, base) for n in range(2 * base)]


def _minimal_period(window: list[int]) -> int:
    # The full window length is always a period, so the minimal one is
    # found among its divisors, checked in increasing order.
    size = len(window)
    for p in range(1, size + 1):
        if size % p:
            continue
        if all(window[i] == window[(i + p) % size] for i in range(size)):
            return p
    return size


def residue_profile(base: int) -> ResidueProfile:
    """Exact reachable set, frequencies, and period for one base."""
    validate_base(base)
    window = fundamental_window(base)
    counts = Counter(window)
    span = len(window)
    frequency = {d: Fraction(counts.get(d, 0), span) for d in range(base)}
    reachable = frozenset(d for d, f in frequency.items() if f > 0)
    return ResidueProfile(
        base=base,
        period=_minimal_period(window),
        reachable=reachable,
        frequency=frequency,
    )


def classify_base(base: int) -> GapClassification:
    """Gappy (some digits unreachable) or non-gappy (all reachable)."""
    profile = residue_profile(base)
    missing = tuple(sorted(set(range(base)) - profile.reachable))
    return GapClassification(base=base, gappy=bool(missing), missing_digits=missing)


def empirical_frequencies(base: int, sample_size: int = DEFAULT_SAMPLE_SIZE) -> EmpiricalFrequencies:
    """Units-digit counts of the first ``sample_size`` triangular numbers.

    Counts n in [1, sample_size], each contributing tri_mod(n, base).
    """
    validate_base(base)
    if sample_size < 1:
        raise ValueError(f"sample_size must be >= 1, got {sample_size}")
    counts = Counter(tri_mod(n, base) for n in range(1, sample_size + 1))
    return EmpiricalFrequencies(
        base=base,
        sample_size=sample_size,
        counts={d: counts.get(d, 0) for d in range(base)},
    )


def power_of_two_sweep(max_base: int) -> list[tuple[int, bool]]:
    """(base, gappy) for every base in 2..=max_base.

    Sweeping makes the pattern visible: within the supported range the
    bases with no gaps are exactly the powers of two.
    """
    if max_base < 2 or max_base > 256:
        raise ValueError(f"max_base must be in [2, 256], got {max_base}")
    return [(base, classify_base(base).gappy) for base in range(2, max_base + 1)]
