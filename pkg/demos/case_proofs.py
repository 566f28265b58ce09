"""Machine-checked case proofs of units-digit facts.

Why can a triangular number never end with 2 in base 3? Split every
index n as n = 3k + i and check what the total's final digit can be for
each i. Since the residues repeat every 2L indices, checking the k = 0
and k = 1 representatives settles each case for all k, and each emitted
congruence is then re-verified directly for k up to 1000.
"""

from tridigits import enumerate_cases, render_transcript, residue_profile, verify_case


def prove_and_check(base: int) -> None:
    transcript = enumerate_cases(base)
    print(render_transcript(transcript), end="")
    checked = sum(1 for case in transcript.cases if verify_case(case, 1000))
    print(f"re-verified {checked}/{len(transcript.cases)} cases for k = 0..1000")
    agrees = transcript.derived_reachable == residue_profile(base).reachable
    print(f"reachable digits agree with the frequency analysis: {agrees}")
    print()


def main() -> None:
    print("Base 3: the final digit 2 is impossible")
    print("-" * 45)
    prove_and_check(3)

    print("Base 4: every digit occurs, but only for the right parity of k")
    print("-" * 45)
    prove_and_check(4)

    print("Base 10: the familiar decimal gaps {2, 4, 7, 9}")
    print("-" * 45)
    prove_and_check(10)


if __name__ == "__main__":
    main()
