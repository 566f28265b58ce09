"""Discrete growth driven by a dividing-cell count and its running sum.

At each step t = 1, 2, ... some number d(t) of cells divides; the total
population is the cumulative sum N(t) = N0 + d(1) + ... + d(t). When
d(t) grows linearly the totals are exactly the triangular numbers, so
the totals inherit all the units-digit structure of that sequence, and
their long-run shape is a power law with exponent approaching 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import validate_base, validate_natural
from .residues import EmpiricalFrequencies

LINEAR = "linear"
CONSTANT = "constant"
DECLINE = "decline"


@dataclass(frozen=True)
class DividingDynamics:
    """How many cells divide at step t.

    linear:   d(t) = t
    constant: d(t) = level
    decline:  d(t) = max(start - slope*t, 0), clamped so the count
              never goes negative
    """

    kind: str
    level: int = 0
    start: int = 0
    slope: int = 0

    def __post_init__(self) -> None:
        if self.kind == LINEAR:
            pass
        elif self.kind == CONSTANT:
            if self.level < 1:
                raise ValueError(f"constant level must be >= 1, got {self.level}")
        elif self.kind == DECLINE:
            if self.start < 1:
                raise ValueError(f"decline start must be >= 1, got {self.start}")
            if self.slope < 1:
                raise ValueError(f"decline slope must be >= 1, got {self.slope}")
        else:
            raise ValueError(f"unknown dynamics kind {self.kind!r}")

    @classmethod
    def linear(cls) -> "DividingDynamics":
        return cls(kind=LINEAR)

    @classmethod
    def constant(cls, level: int) -> "DividingDynamics":
        return cls(kind=CONSTANT, level=level)

    @classmethod
    def decline(cls, start: int, slope: int = 1) -> "DividingDynamics":
        return cls(kind=DECLINE, start=start, slope=slope)

    def dividing_at(self, t: int) -> int:
        if self.kind == LINEAR:
            return t
        if self.kind == CONSTANT:
            return self.level
        return max(self.start - self.slope * t, 0)

    def describe(self) -> str:
        if self.kind == LINEAR:
            return "linear"
        if self.kind == CONSTANT:
            return f"constant:{self.level}"
        return f"decline:{self.start},{self.slope}"


def parse_dynamics(text: str) -> DividingDynamics:
    """Parse ``linear``, ``constant:c``, or ``decline:D,a``."""
    kind, _, params = text.partition(":")
    try:
        if kind == LINEAR and not params:
            return DividingDynamics.linear()
        if kind == CONSTANT and params:
            return DividingDynamics.constant(int(params))
        if kind == DECLINE and params:
            start_text, sep, slope_text = params.partition(",")
            if sep:
                return DividingDynamics.decline(int(start_text), int(slope_text))
    except ValueError as exc:
        raise ValueError(f"malformed dynamics spec {text!r}: {exc}") from None
    raise ValueError(f"malformed dynamics spec {text!r}")


@dataclass(frozen=True)
class GrowthTrace:
    dynamics: DividingDynamics
    horizon: int
    initial_total: int
    dividing: tuple[int, ...]  # d(1) .. d(T)
    total: tuple[int, ...]  # N(1) .. N(T)

    def total_at(self, t: int) -> int:
        if t < 1 or t > self.horizon:
            raise ValueError(f"t must be in [1, {self.horizon}], got {t}")
        return self.total[t - 1]


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    offset: float
    window: tuple[int, int]
    residual: float  # RMS error in log-log space


def simulate(dynamics: DividingDynamics, horizon: int, initial_total: int = 0) -> GrowthTrace:
    """Run the dynamics for ``horizon`` steps, accumulating totals exactly."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    validate_natural(initial_total)
    dividing = []
    total = []
    running = initial_total
    for t in range(1, horizon + 1):
        d = dynamics.dividing_at(t)
        running += d
        dividing.append(d)
        total.append(running)
    return GrowthTrace(
        dynamics=dynamics,
        horizon=horizon,
        initial_total=initial_total,
        dividing=tuple(dividing),
        total=tuple(total),
    )


def default_window(trace: GrowthTrace) -> tuple[int, int]:
    """Upper half of the trace, where asymptotic behavior dominates."""
    return (max(1, trace.horizon // 2), trace.horizon)


def fit_power_law(trace: GrowthTrace, window: tuple[int, int] | None = None) -> PowerLawFit:
    """Least-squares line through (log t, log N(t)) over the window.

    The slope is the power-law exponent. Every total in the window must
    be positive, and the window needs at least two points for a slope
    to exist. math.log is used directly on the integer totals, so
    arbitrarily large populations fit without overflow.
    """
    if window is None:
        window = default_window(trace)
    lo, hi = window
    if lo < 1 or hi > trace.horizon or lo > hi:
        raise ValueError(f"window [{lo}, {hi}] not within [1, {trace.horizon}]")
    if hi - lo < 1:
        raise ValueError("window must contain at least two points")
    ts = range(lo, hi + 1)
    for t in ts:
        if trace.total[t - 1] <= 0:
            raise ValueError(f"total at t={t} is not positive; cannot take its log")
    xs = [math.log(t) for t in ts]
    ys = [math.log(trace.total[t - 1]) for t in ts]
    n = len(xs)
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    sxx = math.fsum((x - mean_x) ** 2 for x in xs)
    sxy = math.fsum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    residual = math.sqrt(
        math.fsum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys)) / n
    )
    return PowerLawFit(exponent=slope, offset=intercept, window=(lo, hi), residual=residual)


def digit_histogram(trace: GrowthTrace, base: int) -> EmpiricalFrequencies:
    """Units-digit counts (base L) of the totals N(1) .. N(T)."""
    validate_base(base)
    counts = {d: 0 for d in range(base)}
    for value in trace.total:
        counts[value % base] += 1
    return EmpiricalFrequencies(base=base, sample_size=trace.horizon, counts=counts)
