from fractions import Fraction

import pytest

import wallcross as wc
from wallcross import MissingBoundsError, ValidationError

P = wc.product()
B_MINUS_F = wc.LatticeClass((1, -1))
B_MINUS_2F = wc.LatticeClass((1, -2))


def labels(index):
    return [(tuple(a.coords for a in st.classes), st.codim) for st in index.strata]


def test_admissible_set_codims():
    s = wc.blow_up(3)
    root = wc.LatticeClass((0, 1, -1, 0))
    assert wc.admissible_set(s, [root]).codim == 2
    deeper = wc.LatticeClass((-1, 2, 0, 0))
    assert wc.square(s, deeper) == -3
    assert wc.admissible_set(s, [deeper]).codim == 4
    pair = wc.admissible_set(s, [root, wc.LatticeClass((1, -1, -1, -1))])
    assert pair.codim == 4


def test_overlapping_fibers_are_not_admissible():
    assert wc.pairing(P, B_MINUS_F, B_MINUS_2F) == -3
    assert not wc.is_admissible(P, [B_MINUS_F, B_MINUS_2F])
    with pytest.raises(ValidationError):
        wc.admissible_set(P, [B_MINUS_F, B_MINUS_2F])


def test_member_validation():
    with pytest.raises(ValidationError):
        wc.is_admissible(P, [B_MINUS_F, B_MINUS_F])  # duplicate
    with pytest.raises(ValidationError):
        wc.is_admissible(P, [wc.LatticeClass((0, 0))])
    with pytest.raises(ValidationError):
        wc.is_admissible(P, [wc.LatticeClass((1, 0))])  # square 0
    with pytest.raises(ValidationError):
        wc.is_admissible(P, [wc.LatticeClass((2, -1))])  # defect -4


def test_exceptional_members_allowed_but_not_labels():
    s = wc.blow_up(1)
    e1 = wc.LatticeClass((0, 1))
    assert wc.is_admissible(s, [e1])
    u = wc.from_areas(s, (1, Fraction(3, 4)))
    index = wc.enumerate_admissible(s, u, 4)
    assert all(e1 not in st.classes for st in index.strata)


def test_index_product_level_4():
    u = wc.from_areas(P, (Fraction(5, 2), 1))
    index = wc.enumerate_admissible(P, u, 4)
    assert index.level == 4
    assert index.residual_codim == 4
    assert labels(index) == [((), 0), (((1, -1),), 2)]


def test_index_product_level_10():
    u = wc.from_areas(P, (Fraction(5, 2), 1))
    index = wc.enumerate_admissible(P, u, 10)
    # B-2F enters with codimension 6; the pair is blocked by the negative
    # mutual intersection, so exactly three labels survive
    assert labels(index) == [
        ((), 0),
        (((1, -1),), 2),
        (((1, -2),), 6),
    ]


def test_index_trivial_level():
    u = wc.from_areas(P, (Fraction(5, 2), 1))
    index = wc.enumerate_admissible(P, u, 2)
    assert labels(index) == [((), 0)]


def test_index_blowup_pairwise_blocking():
    s = wc.blow_up(3)
    u = wc.from_areas(s, (4, 2, 1, 1))
    index = wc.enumerate_admissible(s, u, 4)
    # two roots with positive area, mutually incompatible
    assert labels(index) == [
        ((), 0),
        (((0, 1, -1, 0),), 2),
        (((0, 1, 0, -1),), 2),
    ]


def test_level_validation():
    u = wc.from_areas(P, (Fraction(5, 2), 1))
    for bad in (0, 1, 3, -2):
        with pytest.raises(ValidationError):
            wc.enumerate_admissible(P, u, bad)


def test_nine_fold_blowup_needs_box():
    s = wc.blow_up(9)
    u = wc.from_areas(s, (4,) + (1,) * 9)
    with pytest.raises(MissingBoundsError):
        wc.enumerate_admissible(s, u, 4)
    index = wc.enumerate_admissible(
        s, u, 4, wc.EnumerationBounds(coefficient_box=3)
    )
    assert index.strata[0].classes == ()


def test_compare_levels():
    u = wc.from_areas(P, (Fraction(5, 2), 1))
    v = wc.from_areas(P, (Fraction(7, 2), 1))
    # B-3F separates the two sets but carries codimension 10, which the
    # level-10 index cannot see
    same = wc.compare_levels(P, u, v, 10)
    assert same is True
    assert wc.compare_levels(P, u, v, 12) is False
