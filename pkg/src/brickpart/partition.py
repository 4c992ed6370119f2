"""Partition construction, validation, refinement, and the parent-boundary
incidence statistics used by the slicing lower-bound diagnostics.

Validation is a complete exact check: over the joint breakpoint grid, every
elementary cell must contain exactly one member's closed brick at its
midpoint. A closed brick contains a cell midpoint iff it covers the whole
cell, because no endpoint falls strictly inside a cell; the midpoint test is
therefore implemented as a cell-index range accumulation, which counts the
same thing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import BadAxis, ConstructionInvalid, DimensionMismatch
from .geometry import Brick, Interval, Point, build_grid


@dataclass(frozen=True)
class BrickPartition:
    """A parent brick together with members intended to tile it exactly.

    Construction checks only cheap structural facts (nonempty members,
    uniform dimension); geometric validity is established by `validate`.
    Labels, when present, travel with the members (one per member).
    """

    parent: Brick
    members: tuple[Brick, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise ValueError("a partition needs at least one member")
        for m in members:
            if m.dim != self.parent.dim:
                raise DimensionMismatch(
                    f"member dimension {m.dim} differs from parent dimension {self.parent.dim}"
                )
        object.__setattr__(self, "members", members)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(members):
                raise ValueError("need exactly one label per member")
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.parent.dim

    def __len__(self) -> int:
        return len(self.members)

    def validate(self) -> "ValidationReport":
        return validate(self.parent, self.members)


class FailureKind(Enum):
    OVERLAP = "overlap"
    GAP = "gap"
    OUTSIDE_PARENT = "outside_parent"


@dataclass(frozen=True)
class Failure:
    """One validation failure with an exact witness.

    Gap/overlap failures carry the lexicographically first failing cell's
    midpoint; overlap failures additionally carry the covering member
    indices, outside-parent failures the offending member index.
    """

    kind: FailureKind
    point: Point | None = None
    members: tuple[int, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    failures: tuple[Failure, ...] = ()


def validate(parent: Brick, members: Sequence[Brick]) -> ValidationReport:
    """Exact cover check of members against parent.

    Builds the joint breakpoint grid and counts, per elementary cell, the
    members containing the cell: exactly 1 everywhere means valid; 0 is a
    Gap, 2+ an Overlap (first failing cell in lexicographic order reported).
    Members poking outside the parent short-circuit to OutsideParent
    failures.
    """
    members = tuple(members)
    if not members:
        raise ValueError("a partition needs at least one member")
    for m in members:
        if m.dim != parent.dim:
            raise DimensionMismatch(
                f"member dimension {m.dim} differs from parent dimension {parent.dim}"
            )
    outside = tuple(
        Failure(FailureKind.OUTSIDE_PARENT, None, (idx,))
        for idx, b in enumerate(members)
        if any(s.lo < p.lo or s.hi > p.hi for s, p in zip(b.sides, parent.sides))
    )
    if outside:
        return ValidationReport(False, outside)

    grid = build_grid(parent, members)
    counts = np.zeros(grid.shape, dtype=np.int32)
    for b in members:
        counts[tuple(slice(*grid.cell_span(a, s)) for a, s in enumerate(b.sides))] += 1
    if bool((counts == 1).all()):
        return ValidationReport(True)

    first_bad = int(np.argmax(counts != 1))  # first True in C (lexicographic) order
    cell = tuple(int(i) for i in np.unravel_index(first_bad, counts.shape))
    point = grid.midpoint(cell)
    covering = tuple(i for i, b in enumerate(members) if b.contains_point(point))
    kind = FailureKind.GAP if not covering else FailureKind.OVERLAP
    return ValidationReport(False, (Failure(kind, point, covering),))


def cut(b: Brick, axis: int, n: int) -> list[Brick]:
    """Split b into n equal-length pieces along the 1-based axis.

    n = 1 returns [b] unchanged; all cut coordinates stay exact rationals.
    """
    if not 1 <= axis <= b.dim:
        raise BadAxis(f"axis {axis} outside 1..{b.dim}")
    if n < 1:
        raise ValueError("piece count must be >= 1")
    side = b.sides[axis - 1]
    points = [side.lo + side.length * i / n for i in range(n + 1)]
    return [
        b.replace_side(axis - 1, Interval(points[i], points[i + 1])) for i in range(n)
    ]


def refine(
    P: BrickPartition, plan: Iterable[tuple[int, int, int]]
) -> BrickPartition:
    """Replace planned members with their cut pieces, keeping member order.

    plan entries are (member_index, axis, pieces) with 0-based distinct
    member indices and 1-based axes. The result is validated before return;
    a failure means a bug in the caller's partition and raises
    ConstructionInvalid. Labeled members pass their label to pieces as
    "label.1", "label.2", ...
    """
    plan = list(plan)
    indices = [i for i, _, _ in plan]
    if len(set(indices)) != len(indices):
        raise ValueError("plan member indices must be distinct")
    for i in indices:
        if not 0 <= i < len(P.members):
            raise IndexError(f"plan index {i} outside 0..{len(P.members) - 1}")
    by_index = {i: (axis, n) for i, axis, n in plan}

    new_members: list[Brick] = []
    new_labels: list[str] = []
    for i, b in enumerate(P.members):
        label = P.labels[i] if P.labels is not None else None
        if i in by_index:
            axis, n = by_index[i]
            pieces = cut(b, axis, n)
            new_members.extend(pieces)
            if label is not None:
                new_labels.extend(
                    [label] if n == 1 else [f"{label}.{j + 1}" for j in range(n)]
                )
        else:
            new_members.append(b)
            if label is not None:
                new_labels.append(label)

    report = validate(P.parent, new_members)
    if not report.valid:
        raise ConstructionInvalid(
            f"refinement produced an invalid partition: {report.failures[0]}"
        )
    return BrickPartition(
        P.parent,
        tuple(new_members),
        tuple(new_labels) if P.labels is not None else None,
    )


@dataclass(frozen=True)
class IncidenceReport:
    """Boundary incidence f(b) per member, its sum F, and alpha.

    f(b) counts the parent boundary hyperplanes touched by b (0..2d);
    alpha is the number of members with f(b) = 4, the quantity of interest
    in three dimensions.
    """

    per_member: tuple[int, ...]
    total: int
    alpha: int


def boundary_incidence(P: BrickPartition) -> IncidenceReport:
    """Count, per member, the parent boundary hyperplanes it touches."""
    f = tuple(
        sum(
            int(s.lo == p.lo) + int(s.hi == p.hi)
            for s, p in zip(b.sides, P.parent.sides)
        )
        for b in P.members
    )
    return IncidenceReport(f, sum(f), sum(1 for v in f if v == 4))


def parent_corners_contained(parent: Brick, b: Brick) -> int:
    """Number of parent corners lying in the closed brick b."""
    return sum(1 for c in parent.corners() if b.contains_point(c))
