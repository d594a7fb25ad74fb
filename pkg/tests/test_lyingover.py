import pytest

from huliu import (
    InputError,
    complement_closure_prime,
    as_graded_ideal,
    embed_check,
    is_huliu_prime,
    lying_over,
    maximal_in_t,
    spectrum,
    sub_primes,
    t_set,
    verify_lying_over_all,
)


def _identity_pair(structure):
    return embed_check(structure, frozenset(range(structure.order)))


def test_identity_pairs_embed(cat):
    for name, s in cat.items():
        pair = _identity_pair(s)
        assert pair.restricted.order == s.order, name


def test_diagonal_pair_embeds(u8):
    pair = embed_check(u8, frozenset({0, 3, 4, 7}))
    assert pair.restricted.order == 4
    assert sorted(pair.restricted.halo) == [0, 2]


def test_embed_check_rejects_non_subrngs(u8):
    with pytest.raises(InputError) as err:
        embed_check(u8, frozenset({0, 1, 2, 3, 4}))
    assert err.value.code == "not-a-subrng"


def test_lenient_zero_halo_part_fails_integrality(r8):
    with pytest.raises(InputError) as err:
        embed_check(r8, frozenset({0, 1, 2, 3}), strict=False)
    assert err.value.code == "not-graded-integral"


def test_t_set_examples(r4):
    pair = _identity_pair(r4)
    assert [sorted(j.carrier) for j in t_set(pair, frozenset({0}))] == [[0]]
    assert [sorted(j.carrier) for j in t_set(pair, frozenset({0, 2}))] == [[0], [0, 2]]
    for p in sub_primes(pair):
        assert frozenset({0}) in {j.carrier for j in t_set(pair, p)}


def test_maximal_in_t_examples(r4, u8):
    pair = _identity_pair(r4)
    assert [sorted(j.carrier) for j in maximal_in_t(pair, frozenset({0}))] == [[0]]
    assert [sorted(j.carrier) for j in maximal_in_t(pair, frozenset({0, 2}))] == [[0, 2]]
    diag = embed_check(u8, frozenset({0, 3, 4, 7}))
    for q in maximal_in_t(diag, frozenset({0})):
        assert q.carrier & diag.sub == frozenset({0})


def test_t_set_rejects_non_primes(r4):
    pair = _identity_pair(r4)
    with pytest.raises(InputError) as err:
        t_set(pair, frozenset({0, 1}))
    assert err.value.code == "p-not-prime"


def test_lying_over_identity_pairs(r4, r8):
    for s in (r4, r8):
        pair = _identity_pair(s)
        for p in sub_primes(pair):
            q = lying_over(pair, p)
            assert q.carrier == p


def test_lying_over_diagonal_pair(u8):
    pair = embed_check(u8, frozenset({0, 3, 4, 7}))
    q = lying_over(pair, frozenset({0}))
    assert sorted(q.carrier) == [0, 2]
    q2 = lying_over(pair, frozenset({0, 4}))
    assert q2.carrier & pair.sub == frozenset({0, 4})


def test_lying_over_witnesses_are_spectrum_members_with_exact_trace(cat, u8):
    pairs = [_identity_pair(s) for s in cat.values()]
    pairs.append(embed_check(u8, frozenset({0, 3, 4, 7})))
    for pair in pairs:
        carriers = {q.carrier for q in spectrum(pair.ambient).primes}
        for p in sub_primes(pair):
            q = lying_over(pair, p)
            assert q.carrier in carriers
            assert q.carrier & pair.sub == p


def test_report_rows_for_identity_pairs(r4, r8):
    rep4 = verify_lying_over_all(_identity_pair(r4))
    assert rep4.passed
    assert [(sorted(row.p), [sorted(w) for w in row.witnesses]) for row in rep4.rows] == [
        ([0], [[0]]),
        ([0, 2], [[0, 2]]),
    ]
    rep8 = verify_lying_over_all(_identity_pair(r8))
    assert rep8.passed and len(rep8.rows) == 2


def test_report_rows_for_diagonal_pair(u8):
    pair = embed_check(u8, frozenset({0, 3, 4, 7}))
    report = verify_lying_over_all(pair)
    assert report.passed
    rows = {frozenset(row.p): row for row in report.rows}
    assert set(rows) == {frozenset({0}), frozenset({0, 4})}
    zero_row = rows[frozenset({0})]
    assert [sorted(w) for w in zero_row.witnesses] == [[0, 2]]
    assert [sorted(m) for m in zero_row.maximal] == [[0, 2]]
    halo_row = rows[frozenset({0, 4})]
    assert [sorted(w) for w in halo_row.witnesses] == [[0, 1, 4, 5], [0, 2, 4, 6]]
    assert [sorted(m) for m in halo_row.maximal] == [[0, 1, 4, 5], [0, 2, 4, 6]]
    for row in report.rows:
        assert row.maximal_meets_p and row.maximal_all_prime


def test_maximal_elements_satisfy_both_proof_targets(cat, u8):
    pairs = [_identity_pair(s) for s in cat.values()]
    pairs.append(embed_check(u8, frozenset({0, 3, 4, 7})))
    for pair in pairs:
        for p in sub_primes(pair):
            for q in maximal_in_t(pair, p):
                assert q.carrier & pair.sub == p
                assert is_huliu_prime(pair.ambient, q)
                assert complement_closure_prime(
                    pair.ambient, as_graded_ideal(pair.ambient, q.carrier)
                )
