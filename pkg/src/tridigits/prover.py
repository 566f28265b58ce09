"""Case-by-case congruence facts for units digits of triangular numbers.

Write an index as n = L*k + i. Because tri_mod has period dividing 2L,
the residue of the triangular number mod L is decided entirely by i and
the parity of k. Evaluating the k = 0 and k = 1 representatives for each
i therefore settles every case, and any emitted fact can be re-checked
directly against as many k as desired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import tri_mod, validate_base

PARITY_ANY = "any"
PARITY_EVEN = "even"
PARITY_ODD = "odd"

_PARITY_LABEL = {PARITY_ANY: "all k", PARITY_EVEN: "k even", PARITY_ODD: "k odd"}


@dataclass(frozen=True)
class CongruenceCase:
    """One verified fact: T(L*k + input_digit) == output_digit (mod L),
    for every k of the stated parity."""

    base: int
    input_digit: int
    k_parity: str  # "any" | "even" | "odd"
    output_digit: int


@dataclass(frozen=True)
class ProofTranscript:
    base: int
    cases: tuple[CongruenceCase, ...]
    derived_reachable: frozenset[int]
    derived_missing: tuple[int, ...]


def enumerate_cases(base: int) -> ProofTranscript:
    """Complete case enumeration for one base.

    For each units digit i of the index, the k = 0 and k = 1
    representatives give the even-k and odd-k residues. When they
    coincide the case holds for all k; otherwise it splits into an
    even/odd pair. 2L-periodicity guarantees no finer split exists.
    """
    validate_base(base)
    cases: list[CongruenceCase] = []
    for i in range(base):
        j_even = tri_mod(i, base)
        j_odd = tri_mod(base + i, base)
        if j_even == j_odd:
            cases.append(CongruenceCase(base, i, PARITY_ANY, j_even))
        else:
            cases.append(CongruenceCase(base, i, PARITY_EVEN, j_even))
            cases.append(CongruenceCase(base, i, PARITY_ODD, j_odd))
    reachable = frozenset(c.output_digit for c in cases)
    missing = tuple(sorted(set(range(base)) - reachable))
    return ProofTranscript(
        base=base,
        cases=tuple(cases),
        derived_reachable=reachable,
        derived_missing=missing,
    )


def verify_case(case: CongruenceCase, k_limit: int) -> bool:
    """Check the fact against every admissible k with 0 <= k <= k_limit."""
    if k_limit < 1:
        raise ValueError(f"k_limit must be >= 1, got {k_limit}")
    if case.k_parity == PARITY_ANY:
        ks = range(0, k_limit + 1)
    elif case.k_parity == PARITY_EVEN:
        ks = range(0, k_limit + 1, 2)
    elif case.k_parity == PARITY_ODD:
        ks = range(1, k_limit + 1, 2)
    else:
        raise ValueError(f"unknown parity {case.k_parity!r}")
    base, i, j = case.base, case.input_digit, case.output_digit
    return all(tri_mod(base * k + i, base) == j for k in ks)


def render_transcript(transcript: ProofTranscript) -> str:
    """Fixed ASCII rendering, one case per line, stable across runs.

    Format: header ``base=L``, lines ``S_{Lk+i} == j (mod L) [tag]``
    with tag one of ``k even | k odd | all k``, footer ``missing: {...}``.
    """
    base = transcript.base
    lines = [f"base={base}"]
    for c in transcript.cases:
        tag = _PARITY_LABEL[c.k_parity]
        lines.append(f"S_{{{base}k+{c.input_digit}}} == {c.output_digit} (mod {base}) [{tag}]")
    missing = ",".join(str(d) for d in transcript.derived_missing)
    lines.append("missing: {" + missing + "}")
    return "\n".join(lines) + "\n"
