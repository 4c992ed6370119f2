"""Independent oracles and corpus tools shared by the test modules.

Everything here recomputes results from definitions, without touching the
breakpoint-grid code paths it is used to check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from random import Random

import numpy as np

from brickpart import Brick, BrickPartition, Interval


def axis_eval_points(P: BrickPartition, axis_index: int) -> list[Fraction]:
    """Every member/parent endpoint on one axis plus the midpoints between
    consecutive endpoints: the breakpoint-inclusive flat coordinates."""
    points = {P.parent.sides[axis_index].lo, P.parent.sides[axis_index].hi}
    for b in P.members:
        points.add(b.sides[axis_index].lo)
        points.add(b.sides[axis_index].hi)
    breakpoints = sorted(points)
    mids = [(u + v) / 2 for u, v in zip(breakpoints, breakpoints[1:])]
    return breakpoints + mids


def brute_force_min_flat(P: BrickPartition, free_axis_count: int) -> int:
    """Minimum member count over flats evaluated at every combination of
    breakpoints AND midpoints, straight from the definition: a member meets
    a flat iff it contains the flat's coordinate on every fixed axis."""
    d = P.dim
    best: int | None = None
    for free in combinations(range(1, d + 1), free_axis_count):
        fixed = [a for a in range(1, d + 1) if a not in free]
        mats = []
        for a in fixed:
            candidates = axis_eval_points(P, a - 1)
            mats.append(
                np.array(
                    [
                        [
                            1 if b.sides[a - 1].lo <= c <= b.sides[a - 1].hi else 0
                            for c in candidates
                        ]
                        for b in P.members
                    ],
                    dtype=np.int64,
                )
            )
        if len(mats) == 1:
            counts = mats[0].sum(axis=0)
        elif len(mats) == 2:
            counts = mats[0].T @ mats[1]
        else:
            raise NotImplementedError("corpus stays in d <= 3")
        local = int(counts.min())
        if best is None or local < best:
            best = local
    assert best is not None
    return best


def first_bad_cell_midpoint(P: BrickPartition):
    """Independent gap/overlap finder: scan elementary cells in lexicographic
    order with plain loops and return (midpoint, covering count), or None."""
    axes = []
    for a in range(P.dim):
        points = {P.parent.sides[a].lo, P.parent.sides[a].hi}
        for b in P.members:
            points.add(b.sides[a].lo)
            points.add(b.sides[a].hi)
        axes.append(sorted(points))

    def scan(prefix, a):
        if a == P.dim:
            count = sum(1 for b in P.members if b.contains_point(prefix))
            return (tuple(prefix), count) if count != 1 else None
        for lo, hi in zip(axes[a], axes[a][1:]):
            hit = scan(prefix + [(lo + hi) / 2], a + 1)
            if hit is not None:
                return hit
        return None

    return scan([], 0)


def random_monotone_remap(rng: Random, P: BrickPartition) -> BrickPartition:
    """Apply an independent strictly increasing piecewise-linear map with
    rational knots to every axis (knots = the axis's endpoint set)."""
    tables = []
    for a in range(P.dim):
        knots = {P.parent.sides[a].lo, P.parent.sides[a].hi}
        for b in P.members:
            knots.add(b.sides[a].lo)
            knots.add(b.sides[a].hi)
        knots = sorted(knots)
        image = Fraction(rng.randrange(-8, 9))
        table = {knots[0]: image}
        for knot in knots[1:]:
            image += Fraction(rng.randrange(1, 12), rng.randrange(1, 5))
            table[knot] = image
        tables.append(table)

    def remap(b: Brick) -> Brick:
        return Brick(
            tuple(
                Interval(tables[a][s.lo], tables[a][s.hi])
                for a, s in enumerate(b.sides)
            )
        )

    return BrickPartition(remap(P.parent), tuple(remap(b) for b in P.members))


def random_refine_plan(rng: Random, P: BrickPartition, max_cuts: int = 3):
    count = rng.randrange(0, min(max_cuts, len(P.members)) + 1)
    indices = rng.sample(range(len(P.members)), count)
    return [(i, rng.randrange(1, P.dim + 1), rng.randrange(1, 4)) for i in indices]


def subset_filter_partitions_2x2() -> set[frozenset]:
    """All partitions of the 2x2 cell grid into rectangles, found by
    filtering every subset of the nine candidate rectangles."""
    rects = []
    for x0 in range(2):
        for x1 in range(x0 + 1, 3):
            for y0 in range(2):
                for y1 in range(y0 + 1, 3):
                    rects.append(
                        frozenset((x, y) for x in range(x0, x1) for y in range(y0, y1))
                    )
    cells = frozenset((x, y) for x in range(2) for y in range(2))
    out = set()
    for r in range(1, 5):
        for combo in combinations(rects, r):
            if sum(len(c) for c in combo) == 4 and frozenset().union(*combo) == cells:
                out.add(frozenset(combo))
    return out
