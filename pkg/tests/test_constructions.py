import itertools

import pytest

from huliu import (
    InputError,
    RawLcRng,
    SENTINEL,
    direct_sum_group,
    enumerate_lcrngs,
    identity_hom,
    lcrng_isomorphic,
    lcrng_violations,
    left_identities,
    projection_hom,
    reduction_hom,
    ring_hom,
    ring_product,
    semidirect_null,
    validate_comm_ring,
    zmod,
)
from huliu.kernel import generating_sequence


def test_zmod_values():
    z2 = validate_comm_ring(zmod(2))
    assert z2.order == 2 and z2.one == 1
    z4 = zmod(4)
    assert z4.times(2, 2) == 0
    z1 = zmod(1)
    assert z1.order == 1 and z1.one == 0


def test_zero_ring_is_rejected_as_halo_ingredient():
    with pytest.raises(InputError) as err:
        semidirect_null(zmod(2), zmod(1), ring_hom(zmod(2), zmod(1), (0, 0)))
    assert err.value.code == "zero-b"


def test_ring_product_and_projections():
    p = validate_comm_ring(ring_product(zmod(2), zmod(3)))
    assert p.order == 6
    pi0 = projection_hom(p, zmod(2), zmod(3), 0)
    pi1 = projection_hom(p, zmod(2), zmod(3), 1)
    assert pi0(p.one) == 1 and pi1(p.one) == 1


def test_hom_validation():
    with pytest.raises(InputError) as err:
        ring_hom(zmod(2), zmod(2), (0, 0))
    assert err.value.code == "non-unital-hom"
    with pytest.raises(InputError) as err:
        ring_hom(zmod(2), zmod(4), (0, 1))
    assert err.value.code == "hom-not-additive"
    with pytest.raises(InputError) as err:
        reduction_hom(zmod(4), zmod(3))
    assert err.value.code == "no-canonical-hom"
    assert identity_hom(zmod(5)).mapping == (0, 1, 2, 3, 4)


def test_null_construction_invariants(cat):
    specs = {
        "r4": (2, 2),
        "r8": (4, 2),
        "u8": (4, 2),
        "r18": (6, 3),
    }
    for name, s in cat.items():
        na, nb = specs[name]
        assert s.halo == frozenset(na * b for b in range(nb))
        assert s.r0 == frozenset(range(na))
        assert left_identities(s) == frozenset(
            s.plus(s.left_identity, na * b) for b in range(nb)
        )


def test_builder_output_always_validates():
    raw = semidirect_null(zmod(3), zmod(3), identity_hom(zmod(3)))
    assert lcrng_violations(raw) == []


def _brute_census(group):
    """Independent census: multiplications with additive rows and additive
    row-assignment (forced by distributivity), every left identity, every
    local table on the computed halo, filtered by the full validator."""
    n = group.order
    gens = generating_sequence(group, frozenset(range(n)))
    add = group.add

    expr = {0: []}
    frontier = [0]
    while frontier:
        x = frontier.pop(0)
        for gi, g in enumerate(gens):
            y = add[x][g]
            if y not in expr:
                expr[y] = expr[x] + [gi]
                frontier.append(y)

    endos = []
    for images in itertools.product(range(n), repeat=len(gens)):
        f = [0] * n
        for x in range(n):
            acc = 0
            for gi in expr[x]:
                acc = add[acc][images[gi]]
            f[x] = acc
        if all(f[add[x][y]] == add[f[x]][f[y]] for x in range(n) for y in range(n)):
            endos.append(tuple(f))

    found = set()
    for gen_rows in itertools.product(endos, repeat=len(gens)):
        rows = [None] * n
        for x in range(n):
            acc = tuple([0] * n)
            for gi in expr[x]:
                acc = tuple(add[a][b] for a, b in zip(acc, gen_rows[gi]))
            rows[x] = acc
        mul = tuple(rows)
        for e in range(n):
            if mul[e] != tuple(range(n)):
                continue
            halo = [x for x in range(n) if mul[x][e] == 0]
            if not 1 < len(halo) <= 4:
                continue
            pairs = [(a, b) for a in halo for b in halo]
            for values in itertools.product(halo, repeat=len(pairs)):
                loc = [[SENTINEL] * n for _ in range(n)]
                for (a, b), v in zip(pairs, values):
                    loc[a][b] = v
                raw = RawLcRng(
                    group=group,
                    mul=mul,
                    left_identity=e,
                    local_mul=tuple(map(tuple, loc)),
                )
                if not lcrng_violations(raw):
                    found.add((mul, tuple(map(tuple, loc)), e))
    return found


@pytest.mark.parametrize("orders,expected", [([2], 0), ([4], 0), ([2, 2], 6)])
def test_census_matches_brute_oracle(orders, expected):
    group = direct_sum_group(orders)
    ours = enumerate_lcrngs(group, dedup=False)
    assert len(ours) == expected
    keys = {(s.mul, s.local_mul, s.left_identity) for s in ours}
    assert keys == _brute_census(group)


def test_census_klein_contains_r4(cat):
    census = enumerate_lcrngs(direct_sum_group([2, 2]))
    assert len(census) == 1
    assert lcrng_isomorphic(census[0], cat["r4"])


def test_census_results_are_pairwise_non_isomorphic():
    census = enumerate_lcrngs(direct_sum_group([2, 4]))
    for a, b in itertools.combinations(census, 2):
        assert not lcrng_isomorphic(a, b)
    raw = enumerate_lcrngs(direct_sum_group([2, 4]), dedup=False)
    assert raw and all(any(lcrng_isomorphic(s, t) for t in census) for s in raw)


def test_census_of_z6_is_empty():
    assert enumerate_lcrngs(zmod(6).group) == []


def test_census_bounds():
    assert enumerate_lcrngs(direct_sum_group([2, 2]), max_candidates=0) == []
    with pytest.raises(InputError) as err:
        enumerate_lcrngs(direct_sum_group([2, 3, 3]))
    assert err.value.code == "order-too-large"


def test_isomorphism_distinguishes_catalog(cat):
    assert lcrng_isomorphic(cat["r4"], cat["r4"])
    assert not lcrng_isomorphic(cat["r4"], cat["r8"])
    assert not lcrng_isomorphic(cat["r8"], cat["u8"])


def test_validated_catalog_pairs_are_strict_subrngs(pairs):
    from huliu import is_subrng

    for name, structure, subset in pairs:
        assert is_subrng(structure, subset), name
