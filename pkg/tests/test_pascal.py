import math
from itertools import islice

import pytest

from tridigits import iter_rows, pascal_row, quadratic_diagonal, tri_exact


def test_known_rows():
    assert pascal_row(0).coefficients == (1,)
    assert pascal_row(4).coefficients == (1, 4, 6, 4, 1)
    assert pascal_row(9).coefficients == (1, 9, 36, 84, 126, 126, 84, 36, 9, 1)


def test_negative_row_rejected():
    with pytest.raises(ValueError):
        pascal_row(-1)


def test_rows_symmetric_and_recurrent_up_to_100():
    prev = None
    for n, coeffs in enumerate(islice(iter_rows(), 101)):
        assert len(coeffs) == n + 1
        assert coeffs == coeffs[::-1]
        if prev is not None:
            assert all(coeffs[i] == prev[i - 1] + prev[i] for i in range(1, n))
        prev = coeffs


def test_row_sums_are_powers_of_two():
    for n, coeffs in enumerate(islice(iter_rows(), 61)):
        assert sum(coeffs) == 2**n


@pytest.mark.parametrize("n", [0, 1, 5, 20, 60])
def test_rows_match_binomials(n):
    assert pascal_row(n).coefficients == tuple(math.comb(n, r) for r in range(n + 1))


def test_quadratic_diagonal_first_eight():
    assert quadratic_diagonal(8) == [1, 3, 6, 10, 15, 21, 28, 36]


def test_quadratic_diagonal_bounds():
    assert quadratic_diagonal(1) == [1]
    assert quadratic_diagonal(13)[-1] == 91
    with pytest.raises(ValueError):
        quadratic_diagonal(0)


def test_diagonal_equals_triangular_numbers():
    # the diagonal comes from additively built rows; the closed form is
    # the independent route
    diagonal = quadratic_diagonal(1000)
    assert len(diagonal) == 1000
    for t, value in enumerate(diagonal, start=1):
        assert value == tri_exact(t)
