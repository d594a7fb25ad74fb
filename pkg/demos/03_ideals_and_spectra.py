# Ideal lattices and Hu-Liu prime spectra of the catalog, with the two
# equivalent primality tests run side by side.

from huliu import (
    catalog,
    complement_closure_prime,
    enumerate_ideals,
    is_huliu_prime,
    spectrum,
)

for name, s in catalog().items():
    ideals = enumerate_ideals(s)
    print(f"{name}: {len(ideals)} ideals")
    for ideal in ideals:
        direct = is_huliu_prime(s, ideal)
        closure = complement_closure_prime(s, ideal)
        assert direct == closure
        flag = "prime" if direct else "     "
        print(f"   {flag} {sorted(ideal.carrier)}  =  {sorted(ideal.i0)} + {sorted(ideal.i1)}")
    print("  spectrum:", [sorted(p.carrier) for p in spectrum(s).primes])
    print()
