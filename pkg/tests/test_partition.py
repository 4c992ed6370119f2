from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brickpart import (
    BadAxis,
    Brick,
    BrickPartition,
    DimensionMismatch,
    FailureKind,
    boundary_incidence,
    cut,
    parent_corners_contained,
    refine,
    validate,
)
from brickpart.constructions import piercing_3d_base, slicing_3d, slicing_3d_base

from helpers import first_bad_cell_midpoint

X1 = Brick.from_pairs([(0, 2), (3, 6), (0, 4)])


def test_validate_piercing_base_is_partition():
    base = piercing_3d_base()
    report = validate(base.parent, base.members)
    assert report.valid and report.failures == ()


def test_validate_single_brick():
    b = Brick.from_pairs([(0, 2), (0, 2)])
    assert validate(b, [b]).valid


def test_validate_detects_gap_with_exact_witness():
    base = piercing_3d_base()
    idx = base.labels.index("X'2")
    members = [b for i, b in enumerate(base.members) if i != idx]
    report = validate(base.parent, members)
    assert not report.valid
    (failure,) = report.failures
    assert failure.kind is FailureKind.GAP
    # oracle-frozen value: first uncovered cell midpoint in lexicographic order
    assert failure.point == (Fraction(5, 2), Fraction(1), Fraction(1))
    # independent recount of the same scan
    probe = BrickPartition(base.parent, tuple(members))
    point, count = first_bad_cell_midpoint(probe)
    assert point == failure.point and count == 0


def test_validate_detects_overlap_with_member_pair():
    base = piercing_3d_base()
    idx = base.labels.index("X'2")
    members = list(base.members) + [base.members[idx]]
    report = validate(base.parent, members)
    assert not report.valid
    (failure,) = report.failures
    assert failure.kind is FailureKind.OVERLAP
    assert set(failure.members) == {idx, len(members) - 1}
    covering = [i for i, b in enumerate(members) if b.contains_point(failure.point)]
    assert len(covering) >= 2


def test_validate_reports_outside_parent():
    parent = Brick.from_pairs([(0, 2), (0, 2)])
    inside = Brick.from_pairs([(0, 2), (0, 1)])
    stray = Brick.from_pairs([(0, 2), (1, 3)])
    report = validate(parent, [inside, stray])
    assert not report.valid
    assert [f.kind for f in report.failures] == [FailureKind.OUTSIDE_PARENT]
    assert report.failures[0].members == (1,)


def test_validate_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        validate(Brick.from_pairs([(0, 1)]), [Brick.from_pairs([(0, 1), (0, 1)])])


def test_cut_x1_into_two_along_axis_1():
    pieces = cut(X1, 1, 2)
    assert [p.sides[0].as_pair() for p in pieces] == [(0, 1), (1, 2)]
    assert all(
        p.sides[1].as_pair() == (3, 6) and p.sides[2].as_pair() == (0, 4)
        for p in pieces
    )


def test_cut_identity():
    b = Brick.from_pairs([(0, 1), (2, 5)])
    assert cut(b, 2, 1) == [b]


def test_cut_thirds_exact():
    b = Brick.from_pairs([(0, 1), (0, 1)])
    pieces = cut(b, 1, 3)
    lows = [p.sides[0].lo for p in pieces] + [pieces[-1].sides[0].hi]
    assert lows == [0, Fraction(1, 3), Fraction(2, 3), 1]


def test_cut_bad_axis():
    with pytest.raises(BadAxis):
        cut(X1, 0, 2)
    with pytest.raises(BadAxis):
        cut(X1, 4, 2)


def test_cut_rejects_nonpositive_count():
    with pytest.raises(ValueError):
        cut(X1, 1, 0)


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=6),
)
def test_cut_pieces_tile_the_brick(axis, n):
    b = Brick.from_pairs([(0, 5), (-1, 2), (Fraction(1, 2), 3)])
    pieces = cut(b, axis, n)
    assert len(pieces) == n
    assert len({p.volume for p in pieces}) == 1  # equal volume
    assert validate(b, pieces).valid


def test_refine_piercing_plan_at_k4():
    base = piercing_3d_base()
    index = {label: i for i, label in enumerate(base.labels)}
    k = 4
    plan = [(index[n], axis, k - 1) for n, axis in
            [("X1", 1), ("X2", 1), ("Y1", 2), ("Y2", 2), ("Z1", 3), ("Z2", 3)]]
    plan += [(index[n], axis, k - 2) for n, axis in
             [("X'1", 1), ("X'2", 1), ("Y'1", 2), ("Y'2", 2), ("Z'1", 3), ("Z'2", 3)]]
    refined = refine(base, plan)
    assert len(refined) == 3 + 6 * (k - 1) + 6 * (k - 2) == 33
    assert validate(refined.parent, refined.members).valid


def test_refine_empty_plan_is_identity():
    base = slicing_3d_base(3)
    assert refine(base, []).members == base.members


def test_refine_slicing_plan_at_k5():
    base = slicing_3d_base(5)
    index = {label: i for i, label in enumerate(base.labels)}
    refined = refine(base, [(index["X1"], 2, 3), (index["Y1"], 1, 3)])
    assert len(refined) == 9


def test_refine_rejects_duplicate_indices():
    base = slicing_3d_base(3)
    with pytest.raises(ValueError):
        refine(base, [(0, 1, 2), (0, 2, 2)])


def test_refine_labels_pieces():
    base = slicing_3d_base(4)
    index = {label: i for i, label in enumerate(base.labels)}
    refined = refine(base, [(index["X1"], 2, 2), (index["Y1"], 1, 2)])
    assert refined.labels == ("W0", "X0", "X1.1", "X1.2", "Y0", "Y1.1", "Y1.2")


def test_boundary_incidence_slicing_base_k3():
    base = slicing_3d_base(3)
    report = boundary_incidence(base)
    assert dict(zip(base.labels, report.per_member)) == {
        "W0": 4, "X0": 3, "X1": 4, "Y0": 3, "Y1": 4,
    }
    assert report.total == 18 and report.alpha == 3


def test_boundary_incidence_single_brick():
    parent = Brick.from_pairs([(0, 2)] * 3)
    report = boundary_incidence(BrickPartition(parent, (parent,)))
    assert report.per_member == (6,) and report.total == 6


def test_boundary_incidence_slicing_k2():
    P = slicing_3d(2)
    report = boundary_incidence(P)
    assert report.per_member == (4, 4, 4, 4)
    assert report.total == 16 and report.alpha == 4


def test_parent_corners_contained():
    parent = Brick.from_pairs([(0, 2)] * 3)
    w0 = Brick.from_pairs([(0, 1), (0, 1), (0, 2)])
    assert parent_corners_contained(parent, w0) == 2
    assert parent_corners_contained(parent, parent) == 8
