"""Five presentations, each breaking exactly one of the five conditions.

Every presentation is a free group of rank 4 in disguise, so free reduction
settles its word problem and the restricted triangular property becomes a
finite check over all 512 triples of generators.
"""

from syspres.conditions import check_systolic_conditions
from syspres.link import build_link, check_six_large, classify_diagonal_free_4cycle
from syspres.words import counterexample_realization, counterexample_table, format_word, verify_restricted_triangular_free

for i in range(1, 6):
    ce = counterexample_realization(i)
    print(f"R{i}:", ", ".join(f"{p}{q}={r}" for p, q, r in ce.triples))
    rewritten = {s: format_word(w) for s, w in ce.realization.images.items() if s not in ce.realization.basis}
    print("   free on", " ".join(ce.realization.basis), "with", rewritten)

    free = verify_restricted_triangular_free(ce.symbols, ce.triples, ce.realization)
    print(f"   triples checked: {free.checked}, restricted triangular: {free.passed}")

    table = counterexample_table(i)
    print("   failing conditions:", check_systolic_conditions(table).failed)

    # the same failure, seen as a 4-cycle without a diagonal in the link
    link = build_link(table)
    cycle = check_six_large(link).diagonal_free[0]
    print(f"   diagonal-free cycle {cycle} of type {classify_diagonal_free_4cycle(link, cycle)}")
    print()
