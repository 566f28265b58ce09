"""The triangular numbers hiding in the Pascal triangle.

Prints the first rows of the triangle, marks the diagonal of
quadratic-term coefficients C(n, 2), and checks that the marked values
are exactly the triangular numbers, for as many rows as you like.
"""

from itertools import islice

from tridigits import iter_rows, quadratic_diagonal, tri_exact


def main() -> None:
    print("Rows 0..9, with the C(n,2) entries marked by *:")
    for n, row in enumerate(islice(iter_rows(), 10)):
        cells = []
        for r, value in enumerate(row):
            mark = "*" if r == 2 and n >= 2 else ""
            cells.append(f"{value}{mark}")
        print(f"  row {n}: " + " ".join(cells))
    print()

    diagonal = quadratic_diagonal(8)
    print(f"Marked diagonal: {diagonal}")
    print(f"Triangular numbers: {[tri_exact(t) for t in range(1, 9)]}")
    print()

    count = 2000
    diagonal = quadratic_diagonal(count)
    mismatches = sum(1 for t in range(1, count + 1) if diagonal[t - 1] != tri_exact(t))
    print(f"Checked the identity C(t+1, 2) = T(t) for t = 1..{count}: "
          f"{count - mismatches} matches, {mismatches} mismatches")
    print(f"Largest value checked: C({count + 1}, 2) = {diagonal[-1]}")


if __name__ == "__main__":
    main()
