import itertools

import pytest

from huliu import (
    InputError,
    IntegralWitness,
    component_ring,
    graded_witnesses,
    identity_hom,
    integral_witness,
    is_graded_integral,
    local_power,
    mul_power,
    push_down_check,
    ring_product,
    semidirect_null,
    validate_lcrng,
    witness_holds,
    zmod,
)
from huliu.integrality import component_subrings

from oracles import brute_min_monic_degree


@pytest.fixture(scope="module")
def u16():
    b = ring_product(zmod(2), zmod(2))
    return validate_lcrng(semidirect_null(b, b, identity_hom(b), name="u16"))


def _tables_isomorphic_to_zmod(ring, n):
    model = zmod(n)
    carrier = list(ring.carrier)
    if len(carrier) != n:
        return False
    for images in itertools.permutations(range(n)):
        sigma = dict(zip(carrier, images))
        if sigma[ring.identity] != model.one:
            continue
        if all(
            sigma[ring.plus(a, b)] == model.plus(sigma[a], sigma[b])
            and sigma[ring.times(a, b)] == model.times(sigma[a], sigma[b])
            for a in carrier
            for b in carrier
        ):
            return True
    return False


def test_component_rings_of_catalog(r4, r8):
    assert _tables_isomorphic_to_zmod(component_ring(r4, 0), 2)
    assert _tables_isomorphic_to_zmod(component_ring(r4, 1), 2)
    assert _tables_isomorphic_to_zmod(component_ring(r8, 0), 4)


def test_degree_one_witness_for_local_identity(r4):
    ring1 = component_ring(r4, 1)
    w = integral_witness(ring1, frozenset({0, 2}), 2)
    assert w == IntegralWitness(degree=1, coefficients=(2,))
    assert witness_holds(ring1, 2, w)


def test_degree_one_witness_inside_whole_zero_part(r8):
    ring0 = component_ring(r8, 0)
    w = integral_witness(ring0, frozenset({0, 1, 2, 3}), 2)
    assert w is not None and w.degree == 1


def test_u16_halo_elements_have_degree_at_most_two(u16):
    ring1 = component_ring(u16, 1)
    small = frozenset({0, u16.local_identity})
    for u in sorted(u16.halo):
        w = integral_witness(ring1, small, u)
        assert w is not None and w.degree <= 2
        assert witness_holds(ring1, u, w)
        oracle = brute_min_monic_degree(ring1, small, u, 4)
        assert oracle is not None and oracle[0] == w.degree


def test_minimal_degree_matches_oracle_on_catalog_pairs(pairs):
    for name, structure, subset in pairs:
        s0, s1 = component_subrings(structure, subset)
        ring0 = component_ring(structure, 0)
        ring1 = component_ring(structure, 1)
        for u in structure.elements():
            w0 = integral_witness(ring0, s0, structure.comp0(u))
            w1 = integral_witness(ring1, s1, structure.comp1(u))
            assert w0 is not None and w1 is not None, name
            assert brute_min_monic_degree(ring0, s0, structure.comp0(u), w0.degree)[0] == w0.degree
            assert brute_min_monic_degree(ring1, s1, structure.comp1(u), w1.degree)[0] == w1.degree


def test_elements_of_the_subrng_are_integral_of_degree_one(pairs):
    for name, structure, subset in pairs:
        for u in sorted(subset):
            w0, w1 = graded_witnesses(structure, subset, u)
            assert w0.degree == 1 and w1.degree == 1, name


def test_finite_pairs_are_automatically_integral(pairs):
    for name, structure, subset in pairs:
        for u in structure.elements():
            assert is_graded_integral(structure, subset, u, max_degree=structure.order), name


def test_lenient_pair_without_local_identity_is_not_unital(r8):
    with pytest.raises(InputError) as err:
        is_graded_integral(r8, frozenset({0, 1, 2, 3}), 5, strict=False)
    assert err.value.code == "subring-not-unital"


def test_witness_degree_can_only_drop_for_larger_subrings(u16):
    ring1 = component_ring(u16, 1)
    small = frozenset({0, u16.local_identity})
    whole = frozenset(ring1.carrier)
    for u in sorted(u16.halo):
        w_small = integral_witness(ring1, small, u)
        w_whole = integral_witness(ring1, whole, u)
        assert w_whole.degree <= w_small.degree


def test_power_transport_identity(cat):
    for s in cat.values():
        for x0 in sorted(s.r0):
            for u1 in sorted(s.halo):
                xu = s.times(x0, u1)
                for k in range(1, 5):
                    assert local_power(s, xu, k) == s.times(
                        mul_power(s, x0, k), local_power(s, u1, k)
                    )


def test_push_down_trivial_cases(r8):
    ring1 = component_ring(r8, 1)
    w = integral_witness(ring1, frozenset({0, 4}), 4)
    assert push_down_check(r8, r8.left_identity, 4, w)
    assert push_down_check(r8, 0, 4, w)


def test_push_down_for_every_witness_and_scalar(pairs):
    for name, structure, subset in pairs:
        _, s1 = component_subrings(structure, subset)
        ring1 = component_ring(structure, 1)
        for u1 in sorted(structure.halo):
            w = integral_witness(ring1, s1, u1)
            for x0 in sorted(structure.r0):
                assert push_down_check(structure, x0, u1, w), (name, x0, u1)


def test_push_down_rejects_bogus_witnesses(r8):
    fake = IntegralWitness(degree=1, coefficients=(0,))
    with pytest.raises(InputError) as err:
        push_down_check(r8, 2, 4, fake)
    assert err.value.code == "witness-does-not-hold"
