"""Run the executable lemma checkers over exhaustive and random sweeps.

The three checkers exercise proven statements (a gcd-periodicity fact,
the non-overlap of shifted tail occurrences, and the marked-position gap
inequality), so any violation they ever report is an implementation bug.
"""

from muskit import (
    check_key_lemma,
    check_marker_gap_lemma,
    check_three_overlap_fact,
    exhaustive_verify,
    gen_lower,
    random_verify,
)

for m in (5, 6, 7):
    t = gen_lower(m).text
    fact = check_three_overlap_fact(t, cap=200)
    key = check_key_lemma(t)
    gap = check_marker_gap_lemma(t)
    print(
        f"T_{m} (n={t.n}): fact {fact.checks} checks, key lemma {key.checks}, "
        f"marker gap {gap.checks} -> "
        f"{'all clean' if fact.ok and key.ok and gap.ok else 'VIOLATION'}"
    )

print()
rep = exhaustive_verify(2, 10, {"oracle", "bounds"})
print(f"exhaustive binary <= 10: {rep.texts} texts, {rep.checks} checks, "
      f"{len(rep.violations)} violations")

rep = random_verify(2, 60, 100, 7, {"fact", "key-lemma", "marker-gap"})
print(f"random binary sweep:     {rep.texts} texts, {rep.checks} checks, "
      f"{len(rep.violations)} violations")
