import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from huliu import (
    InputError,
    ValidationFailure,
    direct_sum_group,
    enumerate_subgroups,
    subgroup_closure,
    validate_group,
    zmod,
)
from huliu.kernel import group_violations, subset_key

from oracles import brute_subgroups

KLEIN = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
]

Z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]


def test_klein_is_valid():
    g = validate_group(KLEIN)
    assert g.order == 4
    assert g.zero == 0
    assert all(g.neg(x) == x for x in g.elements())


def test_z4_is_valid_with_inverse_of_1_being_3():
    g = validate_group(Z4)
    assert g.neg(1) == 3


def test_noncommutative_patch_is_reported():
    rows = [list(r) for r in KLEIN]
    rows[1][2] = 2
    violations = group_violations(rows)
    codes = {v.code: v for v in violations}
    assert "add-not-commutative" in codes
    assert codes["add-not-commutative"].witness == (1, 2)
    with pytest.raises(ValidationFailure):
        validate_group(rows)


def test_zero_must_sit_at_index_zero():
    shifted = [[(i + j - 2) % 4 for j in range(4)] for i in range(4)]
    violations = group_violations(shifted)
    assert any(v.code == "zero-not-at-index-zero" for v in violations)


def test_non_square_table_is_an_input_error():
    with pytest.raises(InputError) as err:
        group_violations([[0, 1], [1]])
    assert err.value.code == "non-square-table"


def test_subgroup_closure_examples():
    g = validate_group(Z4)
    assert subgroup_closure(g, {2}) == frozenset({0, 2})
    assert subgroup_closure(g, set()) == frozenset({0})
    k = validate_group(KLEIN)
    assert subgroup_closure(k, {1, 2}) == frozenset({0, 1, 2, 3})


GROUPS = [
    validate_group(Z4),
    validate_group(KLEIN),
    zmod(6).group,
    direct_sum_group([2, 4]),
    direct_sum_group([12]),
]


@settings(deadline=None, max_examples=60)
@given(data=st.data(), gi=st.integers(0, len(GROUPS) - 1))
def test_closure_is_idempotent_and_monotone(data, gi):
    g = GROUPS[gi]
    seed = data.draw(st.frozensets(st.integers(0, g.order - 1), max_size=g.order))
    bigger = data.draw(st.frozensets(st.integers(0, g.order - 1), max_size=g.order))
    closed = subgroup_closure(g, seed)
    assert subgroup_closure(g, closed) == closed
    assert closed <= subgroup_closure(g, seed | bigger)


def test_known_subgroup_lattices():
    assert enumerate_subgroups(validate_group(Z4)) == [
        frozenset({0}),
        frozenset({0, 2}),
        frozenset({0, 1, 2, 3}),
    ]
    assert len(enumerate_subgroups(validate_group(KLEIN))) == 5
    assert len(enumerate_subgroups(direct_sum_group([2, 4]))) == 8


@pytest.mark.parametrize("group", GROUPS, ids=["z4", "klein", "z6", "z2xz4", "z12"])
def test_enumeration_matches_subset_scan_oracle(group):
    ours = enumerate_subgroups(group)
    assert ours == brute_subgroups(group)
    for s in ours:
        assert all(group.add[a][b] in s for a in s for b in s)


def test_canonical_ordering_is_size_then_membership():
    subs = enumerate_subgroups(validate_group(KLEIN))
    assert subs == sorted(subs, key=subset_key)
