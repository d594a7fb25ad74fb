# Build the smallest interesting structure from ring ingredients and watch
# the validator accept it, then break one table entry and watch it complain.

from huliu import identity_hom, lcrng_violations, semidirect_null, validate_lcrng, zmod
from dataclasses import replace

z2 = zmod(2)
raw = semidirect_null(z2, z2, identity_hom(z2), name="r4")
r4 = validate_lcrng(raw)

print("order:", r4.order)
print("designated left identity:", r4.left_identity)
print("halo:", sorted(r4.halo), "with local identity", r4.local_identity)
print("multiplication table:")
for row in r4.mul:
    print("  ", row)
print("local product (# = -1 means undefined):")
for row in r4.local_mul:
    print("  ", row)

print("\nviolations on the valid structure:", lcrng_violations(raw))

rows = [list(r) for r in raw.mul]
rows[1][2] = 0  # the left identity row must reproduce its argument
broken = replace(raw, mul=tuple(map(tuple, rows)))
print("\nafter patching mul[1][2] to 0:")
for violation in lcrng_violations(broken):
    print("  ", violation)
