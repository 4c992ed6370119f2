"""Piercing and slicing numbers via exact enumeration over grid cells.

A flat (axis-parallel line, plane, ...) meets a member iff on every fixed
axis its coordinate lies in the member's closed interval. Evaluating flats at
elementary-cell midpoints attains the global minimum over all flats: a flat
whose fixed coordinates sit on breakpoints meets a superset of the members
met by the flat of any adjacent cell, and flats strictly inside a cell meet
exactly the cell midpoint's members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

import numpy as np

from .errors import BadCodimension, DimensionMismatch, QueryOutsideParent
from .geometry import BreakpointGrid, ScalarLike, as_scalar, build_grid
from .partition import BrickPartition


@dataclass(frozen=True)
class FlatQuery:
    """An axis-parallel flat: free axes plus exact coordinates on the rest.

    Axes are 1-based; free and fixed axes must partition 1..d. One free axis
    is a line, d-1 free axes an axis-parallel hyperplane. fixed_coords may be
    given as a mapping {axis: coord} or as (axis, coord) pairs.
    """

    free_axes: tuple[int, ...]
    fixed_coords: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        free = tuple(sorted({int(a) for a in self.free_axes}))
        raw = self.fixed_coords
        items = raw.items() if isinstance(raw, Mapping) else raw
        fixed = tuple(sorted((int(a), as_scalar(c)) for a, c in items))
        if not free:
            raise ValueError("a flat needs at least one free axis")
        if not fixed:
            raise ValueError("a flat needs at least one fixed axis")
        axes = sorted(free + tuple(a for a, _ in fixed))
        if axes != list(range(1, len(axes) + 1)):
            raise DimensionMismatch("free and fixed axes must partition 1..d")
        object.__setattr__(self, "free_axes", free)
        object.__setattr__(self, "fixed_coords", fixed)

    @property
    def dim(self) -> int:
        return len(self.free_axes) + len(self.fixed_coords)

    @property
    def fixed(self) -> dict[int, Fraction]:
        return dict(self.fixed_coords)

    @classmethod
    def line(cls, free_axis: int, fixed: Mapping[int, ScalarLike]) -> "FlatQuery":
        return cls((free_axis,), tuple(fixed.items()))

    @classmethod
    def hyperplane(cls, normal_axis: int, coord: ScalarLike, dim: int) -> "FlatQuery":
        free = tuple(a for a in range(1, dim + 1) if a != normal_axis)
        return cls(free, ((normal_axis, coord),))


def hit_members(P: BrickPartition, q: FlatQuery) -> tuple[int, ...]:
    """Indices of members whose closed brick the flat meets."""
    if q.dim != P.dim:
        raise DimensionMismatch(f"query dimension {q.dim} differs from partition's {P.dim}")
    for a, c in q.fixed_coords:
        if not P.parent.sides[a - 1].contains(c):
            raise QueryOutsideParent(
                f"axis {a} coordinate {c} outside parent {P.parent.sides[a - 1]!r}"
            )
    return tuple(
        i
        for i, b in enumerate(P.members)
        if all(b.sides[a - 1].contains(c) for a, c in q.fixed_coords)
    )


def count_intersections(P: BrickPartition, q: FlatQuery) -> int:
    """Number of members met by the flat (closed-set semantics)."""
    return len(hit_members(P, q))


@dataclass
class FlatProfile:
    """Exact per-flat counts for every free-axis choice of a given size.

    counts maps each free-axes tuple to the array of member counts over the
    fixed axes' elementary cells (C-ordered, one entry per cell combination).
    The witness is the first flat attaining the minimum, in enumeration order
    (free-axis choices ascending, cells lexicographic), and reproduces the
    minimum when re-evaluated with count_intersections.
    """

    minimum: int
    witness: FlatQuery
    counts: dict[tuple[int, ...], np.ndarray]
    grid: BreakpointGrid


def min_flat_count(P: BrickPartition, free_axis_count: int) -> FlatProfile:
    """Minimum member count over all axis-parallel flats with the given
    number of free axes, computed at elementary-cell midpoints."""
    d = P.dim
    if not 1 <= free_axis_count <= d - 1:
        raise BadCodimension(f"free axis count {free_axis_count} outside 1..{d - 1}")
    grid = build_grid(P.parent, P.members)
    ncells = grid.shape

    best: int | None = None
    witness: FlatQuery | None = None
    all_counts: dict[tuple[int, ...], np.ndarray] = {}
    for free in combinations(range(1, d + 1), free_axis_count):
        fixed_axes = tuple(a for a in range(1, d + 1) if a not in free)
        shape = tuple(ncells[a - 1] for a in fixed_axes)
        counts = np.zeros(shape, dtype=np.int32)
        for b in P.members:
            counts[
                tuple(slice(*grid.cell_span(a - 1, b.sides[a - 1])) for a in fixed_axes)
            ] += 1
        all_counts[free] = counts
        local_min = int(counts.min())
        if best is None or local_min < best:
            best = local_min
            first = int(np.argmax(counts == local_min))
            cell = np.unravel_index(first, shape)
            witness = FlatQuery(
                free,
                tuple(
                    (a, grid.cell_midpoint(a - 1, int(i)))
                    for a, i in zip(fixed_axes, cell)
                ),
            )
    assert best is not None and witness is not None
    return FlatProfile(best, witness, all_counts, grid)


def piercing_number(P: BrickPartition) -> int:
    """Minimum number of members met by any axis-parallel line."""
    return min_flat_count(P, 1).minimum


def slicing_number(P: BrickPartition) -> int:
    """Minimum number of members met by any axis-parallel hyperplane."""
    return min_flat_count(P, P.dim - 1).minimum
