# Every structure splits as R = R0 + halo.  The components come from
# multiplying by the designated left identity, and the induced commutative
# product turns the noncommutative table into a commutative ring with many
# zero divisors (the whole halo multiplies to zero).

from huliu import catalog, decompose, induced_product, left_identities

for name, s in catalog().items():
    split = decompose(s)
    print(f"{name}: r0 = {sorted(split.r0)}, r1 = {sorted(split.r1)}")
    print("  left identities:", sorted(left_identities(s)))
    for a in s.elements():
        print(f"   {a} = {split.comp0[a]} + {split.comp1[a]}")
    pairs = [(a, b) for a in s.halo for b in s.halo]
    print("  induced product kills halo pairs:",
          all(induced_product(s, a, b) == 0 for a, b in pairs))
    print()
