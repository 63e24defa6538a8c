from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from skewschub.nilcoxeter import schubert_A, schubert_C, schubert_D, stanley_F
from skewschub.poly import ONE, ZERO, restrict, x, y, z
from skewschub.shapes import (
    TypedPartition,
    compatible_pairs,
    grassmannian,
    partitions_in,
    skew_boxes,
    skew_element,
)
from skewschub.tableaux import (
    Kind,
    Letter,
    _chain_sum,
    _sorted_shapes,
    double_schur_determinant,
    elementary,
    enumerate_bitableaux,
    enumerate_k_tableaux,
    enumerate_k_tritableaux,
    enumerate_typed_tableaux,
    enumerate_typed_tritableaux,
    filling_to_chain,
    mixed_stanley,
    schur_single,
    stanley_E_tableau,
    stanley_F_tableau,
    tableau_eta,
    tableau_schur,
    tableau_sum,
    tableau_theta,
    tritableau_steps_D,
    weight_bitableau,
)
from skewschub.weyl import GroupTag, SignedPermutation

A, BC, D = GroupTag.A, GroupTag.BC, GroupTag.D
EMPTY1 = TypedPartition((), 1, 0)


def fitting(bound, k, tag, n):
    return [(lam, mu) for lam, mu in compatible_pairs(bound, k, tag) if skew_element(lam, mu, k, tag).fits(n)]


def split(tableaux):
    """(count without double-primed letters, histogram of n over the rest)."""
    plain, hist = 0, Counter()
    for t in tableaux:
        if t.has_kind(Kind.DOUBLE_PRIMED):
            hist[t.n_stat] += 1
        else:
            plain += 1
    return plain, dict(hist)


# type A

def test_single_box_bitableaux():
    ts = list(enumerate_bitableaux((1,), (), 1, 2))
    assert sorted(str(t) for t in ts) == ["1", "1'"]
    assert {weight_bitableau(t) for t in ts} == {x(1), -y(1)}
    assert tableau_sum(ts) == x(1) - y(1) == tableau_schur((1,), (), 1)


def test_equal_shapes_give_one():
    ts = list(enumerate_bitableaux((2, 1), (2, 1), 2, 3))
    assert len(ts) == 1 and ts[0].filling == {}
    assert weight_bitableau(ts[0]) == ONE
    assert tableau_schur((2, 1), (2, 1), 2) == ONE
    assert tableau_theta((3, 1), (3, 1), 1, 3, 2) == ONE
    lam = TypedPartition((3, 1), 1, 1)
    assert tableau_eta(lam, lam, 1, 3, 2) == ONE
    assert stanley_F_tableau((2,), (2,), 1, 2) == ONE
    assert mixed_stanley((2,), (2,), 1, BC, 2, 2, 2) == ONE


def test_bitableau_sum_is_grassmannian_polynomial():
    assert tableau_schur((2, 1), (), 2) == schubert_A(SignedPermutation((2, 4, 1, 3), A))


def test_bitableaux_match_nilcoxeter_in_3x3():
    count = 0
    for m in (1, 2, 3):
        for lam, mu in compatible_pairs((3, 3, 3)[:m], m, A):
            w = skew_element(lam, mu, m, A)
            assert tableau_schur(lam, mu, m) == schubert_A(w), (lam, mu, m)
            count += 1
    assert count > 30


def test_bitableau_count_stable_in_n():
    for lam, mu in [((2, 1), ()), ((2, 2), (1,)), ((3, 1), (1,))]:
        counts = [len(list(enumerate_bitableaux(lam, mu, 2, n))) for n in (6, 7, 8)]
        assert counts[0] == counts[1] == counts[2]


def test_bitableau_precondition():
    with pytest.raises(ValueError):
        tableau_schur((1, 1, 1), (), 2)
    with pytest.raises(ValueError):
        list(enumerate_bitableaux((2, 1), (), 2, 2))


# type C

def test_worked_example_C_counts():
    ts = list(enumerate_k_tritableaux((3, 1), (), 1, 3, 2))
    assert split(ts) == (12, {3: 1, 2: 7, 1: 8})
    letters = set().union(*(t.used_letters() for t in ts if not t.has_kind(Kind.DOUBLE_PRIMED)))
    assert letters <= {Letter(Kind.PRIMED, 2), Letter(Kind.PRIMED, 1), Letter(Kind.UNMARKED, 1), Letter(Kind.UNMARKED, 2)}


def test_worked_example_C_identity():
    def theta(lam):
        return restrict(schubert_C(grassmannian(lam, 1, BC), 3, 2), "y")

    y1 = y(1)
    lhs = tableau_theta((3, 1), (), 1, 3, 2)
    assert lhs == theta((3, 1)) - y1 * theta((2, 1)) + y1 ** 2 * theta((2,))
    assert lhs == schubert_C(grassmannian((3, 1), 1, BC), 3, 2)


def test_k0_single_box():
    assert stanley_F_tableau((1,), (), 0, 1) == 2 * z(1)
    assert [t.render() for t in enumerate_k_tableaux((1,), (), 0, 1)] == ["1"]


def test_stanley_F_tableaux_match_nilcoxeter():
    for k in (0, 1, 2):
        for lam, mu in compatible_pairs((4, 3, 2, 1), k, BC):
            w = skew_element(lam, mu, k, BC)
            if w.size <= 4 and sum(lam) - sum(mu) <= 5:
                assert stanley_F_tableau(lam, mu, k, 2) == stanley_F(w, 2)


def test_y_free_part_counts_single_alphabet_tableaux():
    ts = list(enumerate_k_tritableaux((3, 1), (), 1, 3, 2))
    plain = tableau_sum(t for t in ts if not t.has_kind(Kind.DOUBLE_PRIMED))
    assert plain == restrict(tableau_theta((3, 1), (), 1, 3, 2), "y")


def test_mixed_stanley_without_marked_letters_is_F():
    for k in (0, 1):
        for lam, mu in compatible_pairs((3, 2, 1), k, BC):
            assert mixed_stanley(lam, mu, k, BC, 0, 2, 0) == stanley_F_tableau(lam, mu, k, 2)
    for lam, mu in compatible_pairs((3, 2, 1), 1, D):
        assert mixed_stanley(lam, mu, 1, D, 0, 2, 0) == stanley_E_tableau(lam, mu, 2)


def test_mixed_stanley_rejects_type_A():
    with pytest.raises(ValueError):
        mixed_stanley((1,), (), 1, A, 1, 1, 1)


# type D

def test_worked_example_D_type1():
    lam = TypedPartition((3, 1), 1, 1)
    ts = list(enumerate_typed_tritableaux(lam, EMPTY1, 1, 3, 2))
    assert split(ts) == (13, {1: 2, 0: 12})


def test_worked_example_D_type2():
    lam = TypedPartition((3, 1), 1, 2)
    ts = list(enumerate_typed_tritableaux(lam, EMPTY1, 1, 3, 2))
    assert split(ts) == (6, {1: 3, 0: 20})


def test_worked_example_D_identities():
    def eta(parts, t):
        return restrict(schubert_D(grassmannian(TypedPartition(parts, 1, t), 1, D), 3, 2), "y")

    y1, y2 = y(1), y(2)
    lhs = tableau_eta(TypedPartition((3, 1), 1, 1), EMPTY1, 1, 3, 2)
    assert lhs == eta((3, 1), 1) - (y1 + y2) * eta((2, 1), 1)
    lhs = tableau_eta(TypedPartition((3, 1), 1, 2), EMPTY1, 1, 3, 2)
    rhs = (eta((3, 1), 2) - y1 * eta((3,), 0) - (y1 + y2) * eta((2, 1), 2) + y1 ** 2 * eta((2,), 0)
           + y1 * y2 * eta((1, 1), 2) - y1 ** 2 * y2 * eta((1,), 2))
    assert lhs == rhs


def test_circled_letters_follow_type():
    lam = TypedPartition((3, 1), 1, 2)
    for t in enumerate_typed_tritableaux(lam, EMPTY1, 1, 3, 2):
        for lo, hi, letter in zip(t.chain, t.chain[1:], t.letters):
            if letter.kind in (Kind.UNMARKED, Kind.CIRCLED):
                assert (letter.kind is Kind.CIRCLED) == (hi.type == 2)


def test_typed_tableaux_for_E():
    lam = TypedPartition((2,), 1, 0)
    ts = list(enumerate_typed_tableaux(lam, EMPTY1, 2))
    assert tableau_sum(ts) == stanley_E_tableau(lam, EMPTY1, 2)


def test_literal_column_bound_breaks_the_sum():
    lam = TypedPartition((1, 1), 1, 2)
    shapes = _sorted_shapes(lam, EMPTY1, 1, D)
    target = schubert_D(grassmannian(lam, 1, D), 4, 1)
    fixed = _chain_sum(EMPTY1, lam, tritableau_steps_D(lam, EMPTY1, 4, 1), shapes)
    literal = _chain_sum(EMPTY1, lam, tritableau_steps_D(lam, EMPTY1, 4, 1, literal_y_bound=True), shapes)
    assert fixed == target
    assert literal != target


def test_tableau_sums_match_nilcoxeter_small():
    for lam, mu in fitting((3, 2, 1), 1, BC, 3):
        w = skew_element(lam, mu, 1, BC)
        assert tableau_theta(lam, mu, 1, 3, 2) == schubert_C(w, 3, 2)
    for lam, mu in fitting((3, 2, 1), 1, D, 3):
        w = skew_element(lam, mu, 1, D)
        assert tableau_eta(lam, mu, 1, 3, 2) == schubert_D(w, 3, 2)


def test_typed_k_mismatch_rejected():
    with pytest.raises(ValueError):
        tableau_eta(TypedPartition((3, 1), 1, 1), EMPTY1, 2, 3, 2)


# structure of fillings

def _check_filling(t):
    filling = t.filling
    assert set(filling) == set(skew_boxes(tuple(t.outer.parts if hasattr(t.outer, "parts") else t.outer),
                                          tuple(t.inner.parts if hasattr(t.inner, "parts") else t.inner)))
    for (r, c), letter in filling.items():
        right, below = filling.get((r, c + 1)), filling.get((r + 1, c))
        if right is not None:
            assert letter.rank <= right.rank
        if below is not None:
            assert letter.rank <= below.rank


def test_fillings_weakly_increase():
    for t in enumerate_k_tritableaux((3, 1), (), 1, 3, 2):
        _check_filling(t)
    for t in enumerate_typed_tritableaux(TypedPartition((3, 1), 1, 2), EMPTY1, 1, 3, 2):
        _check_filling(t)
    for t in enumerate_bitableaux((3, 2), (1,), 2, 6):
        _check_filling(t)


def test_chain_filling_round_trip():
    for t in enumerate_k_tritableaux((3, 1), (), 1, 3, 2):
        alphabet = list(t.letters)
        rebuilt = filling_to_chain(t.filling, (), alphabet)
        assert rebuilt == [tuple(s) for s in t.chain]


def test_render_uses_leading_dots():
    ts = list(enumerate_bitableaux((2, 1), (1,), 2, 5))
    assert all(t.render().splitlines()[0].startswith(". ") for t in ts)
    assert Letter(Kind.DOUBLE_PRIMED, 2).__str__() == "2''"
    assert str(Letter(Kind.CIRCLED, 1)) == "1@"


def test_enumeration_is_deterministic():
    a = [t.render() for t in enumerate_k_tritableaux((3, 1), (), 1, 3, 2)]
    b = [t.render() for t in enumerate_k_tritableaux((3, 1), (), 1, 3, 2)]
    assert a == b


def test_dp_sum_equals_enumeration_sum():
    for lam, mu in fitting((3, 2, 1), 1, BC, 3):
        assert tableau_sum(enumerate_k_tritableaux(lam, mu, 1, 3, 2)) == tableau_theta(lam, mu, 1, 3, 2)
    for lam, mu in fitting((3, 2, 1), 1, D, 3):
        assert tableau_sum(enumerate_typed_tritableaux(lam, mu, 1, 3, 2)) == tableau_eta(lam, mu, 1, 3, 2)


# determinant

def test_elementary_small():
    assert elementary(0, 3) == ONE
    assert elementary(1, 2) == -y(1) - y(2)
    assert elementary(2, 2) == y(1) * y(2)
    assert elementary(3, 2) == ZERO
    assert elementary(1, 1, negate=False) == y(1)


def test_schur_single_small():
    assert schur_single((), 2) == ONE
    assert schur_single((1,), 2) == x(1) + x(2)
    assert schur_single((1, 1), 2) == x(1) * x(2)
    assert schur_single((1, 1, 1), 2) == ZERO


def test_determinant_examples():
    assert double_schur_determinant((), 1) == ONE
    assert double_schur_determinant((1,), 1) == x(1) - y(1)
    with pytest.raises(ValueError):
        double_schur_determinant((1, 1), 1)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([lam for lam in partitions_in((3, 3, 3))]), st.integers(1, 3))
def test_determinant_matches_tableaux(lam, m):
    if len(lam) <= m:
        assert double_schur_determinant(lam, m) == tableau_schur(lam, (), m)
