"""Cell-population growth as a running sum of dividing-cell counts.

A population where the number of dividing cells grows linearly
accumulates totals 1, 3, 6, 10, ... , so in the long run the size
follows a power law with exponent 2. A constant dividing count gives
linear growth (exponent 1), and a linearly declining count gives a
growth that flattens out. Because the linear-growth totals are exactly
the triangular numbers, their final digits show the same base-dependent
gaps as the number sequence itself.
"""

from tridigits import DividingDynamics, digit_histogram, fit_power_law, simulate


def show(dynamics: DividingDynamics, steps: int) -> None:
    trace = simulate(dynamics, steps)
    head = " ".join(str(v) for v in trace.total[:8])
    print(f"{dynamics.describe()}: totals start {head} ...")
    try:
        fit = fit_power_law(trace)
        print(f"  log-log slope over t in [{fit.window[0]}, {fit.window[1]}]: "
              f"{fit.exponent:.4f}  (rms residual {fit.residual:.2e})")
    except ValueError as exc:
        print(f"  no power-law fit: {exc}")
    print()


def main() -> None:
    print("Three dividing-cell dynamics, 2000 steps each")
    print("=" * 55)
    show(DividingDynamics.linear(), 2000)
    show(DividingDynamics.constant(5), 2000)
    show(DividingDynamics.decline(2000, 1), 2000)

    print("Final digits of the linearly-growing population's size")
    print("=" * 55)
    trace = simulate(DividingDynamics.linear(), 10_000)
    for base in (10, 8):
        hist = digit_histogram(trace, base)
        missing = [d for d in range(base) if hist.counts[d] == 0]
        print(f"base {base}: counts {[hist.counts[d] for d in range(base)]}")
        if missing:
            print(f"  the population size never ends with {missing} in base {base}")
        else:
            print(f"  every base-{base} digit occurs")
    print()
    print("The same gaps as the triangular numbers themselves: a censused")
    print("population of this kind can be recognized by the sizes it skips.")


if __name__ == "__main__":
    main()
