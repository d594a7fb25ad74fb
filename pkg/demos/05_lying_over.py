# The lying-over replay.  For a subrng R of U (graded integral, automatic in
# the finite strict setting) every Hu-Liu prime p of R is the trace of a
# prime q of U.  The classical proof takes a maximal element of
# T = {ideals J : J ∩ R ⊆ p} via Zorn's Lemma; here the lattice is finite,
# so maximality is an exhaustive search and both proof targets are checked.

from huliu import catalog, embed_check, lying_over, maximal_in_t, sub_primes, t_set, verify_lying_over_all

u8 = catalog()["u8"]
diagonal = frozenset({0, 3, 4, 7})
pair = embed_check(u8, diagonal)

print("ambient order:", u8.order, " subrng:", sorted(diagonal))
print("primes of the subrng (ambient indices):", [sorted(p) for p in sub_primes(pair)])
print()

for p in sub_primes(pair):
    members = t_set(pair, p)
    tops = maximal_in_t(pair, p)
    q = lying_over(pair, p)
    print(f"p = {sorted(p)}")
    print("  T-set:", [sorted(j.carrier) for j in members])
    print("  maximal elements:", [sorted(j.carrier) for j in tops])
    print("  lying-over witness:", sorted(q.carrier), " trace:", sorted(q.carrier & diagonal))
    print()

report = verify_lying_over_all(pair)
print("full report passed:", report.passed)
