"""Random valid partitions for property testing.

Recursive axis splits keep every intermediate state a valid partition, so
the samples exercise the validator and the metrics without ever needing a
repair step. Split coordinates are exact rationals with small denominators.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .geometry import Brick, Interval
from .partition import BrickPartition


def random_split_partition(
    rng: Random,
    d: int,
    members: int,
    side: int = 8,
    parent: Brick | None = None,
) -> BrickPartition:
    """Valid d-dimensional partition with the given member count.

    Starts from parent (default [0, side]^d) and repeatedly splits a random
    member along a random axis at a random eighth of its extent.
    """
    if parent is None:
        parent = Brick.from_pairs([(0, side)] * d)
    pieces = [parent]
    while len(pieces) < members:
        i = rng.randrange(len(pieces))
        axis = rng.randrange(d)
        iv = pieces[i].sides[axis]
        at = iv.lo + iv.length * Fraction(rng.randrange(1, 8), 8)
        lo_piece = pieces[i].replace_side(axis, Interval(iv.lo, at))
        hi_piece = pieces[i].replace_side(axis, Interval(at, iv.hi))
        pieces[i : i + 1] = [lo_piece, hi_piece]
    return BrickPartition(parent, tuple(pieces))
