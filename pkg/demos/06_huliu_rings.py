# Rings with the Hu-Liu product.  Every left commutative rng induces one:
# take sigma = the left identity, point one arrow each way across the
# noncommutative product, and let the bullet be the induced commutative
# product.  A plain commutative ring is the degenerate case where both
# arrows coincide with the product and the halo collapses to zero.

from huliu import (
    RawHlRing,
    catalog,
    diassociativity_report,
    from_lcrng,
    hl_halo,
    is_hl_commutative,
    validate_hlring,
    zmod,
)

for name, s in catalog().items():
    ring = from_lcrng(s)
    print(f"{name}: bridge valid, halo {sorted(hl_halo(ring))},"
          f" hl-commutative: {is_hl_commutative(ring)}")
print()

print("diassociativity report for the bridge of r4 (< is the left arrow):")
for identity, holds in diassociativity_report(from_lcrng(catalog()["r4"])).items():
    print(f"   {identity}: {holds}")
print()

z4 = zmod(4)
degenerate = validate_hlring(
    RawHlRing(group=z4.group, bullet=z4.mul, rarrow=z4.mul, larrow=z4.mul, sigma=z4.one)
)
print("degenerate Z4 case: halo", sorted(degenerate.halo),
      ", all five identities hold:",
      all(diassociativity_report(degenerate).values()))
