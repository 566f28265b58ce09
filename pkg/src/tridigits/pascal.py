"""Pascal triangle rows and the diagonal of quadratic-term coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class PascalRow:
    index: int
    coefficients: tuple[int, ...]


def iter_rows() -> Iterator[tuple[int, ...]]:
    """Yield rows (1), (1, 1), (1, 2, 1), ... forever.

    Rows are built by the additive recurrence only, so every entry is an
    exact integer at any depth.
    """
    row = (1,)
    n = 0
    while True:
        yield row
        n += 1
        row = (1,) + tuple(row[i] + row[i + 1] for i in range(n - 1)) + (1,)


def pascal_row(n: int) -> PascalRow:
    """Row n of the triangle: C(n, 0) .. C(n, n)."""
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    rows = iter_rows()
    for _ in range(n):
        next(rows)
    return PascalRow(index=n, coefficients=next(rows))


def quadratic_diagonal(count: int) -> list[int]:
    """C(2,2), C(3,2), ..., C(count+1, 2), read off actual rows.

    These are the coefficients sitting two places into each row from
    row 2 onward; element t equals the t-th triangular number. The
    values are extracted from additively built rows, not computed by
    the closed form, so comparing the two is a real cross-check.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    out = []
    for n, row in enumerate(iter_rows()):
        if n >= 2:
            out.append(row[2])
            if len(out) == count:
                return out
    raise AssertionError("unreachable")
