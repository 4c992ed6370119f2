"""Exact geometric primitives: rational scalars, closed intervals, bricks,
and the per-axis breakpoint grids everything downstream is evaluated on.

Every coordinate is a `fractions.Fraction`; no operation in this package
introduces floating point. Bricks are closed sets ("intersects" always means
nonempty intersection of closed sets), and intervals are nondegenerate by
construction.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BrickOutsideParent, DegenerateInterval, DimensionMismatch

Scalar = Fraction
Point = tuple[Fraction, ...]
ScalarLike = Fraction | int | str


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions, and strings ("3", "0.5", "2/7") to exact scalars.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(
            "floating-point coordinates are not allowed; pass Fraction, int, or str"
        )
    return Fraction(value)


def _decimal_places(den: int) -> int | None:
    """Digits needed for a terminating decimal, or None if non-terminating."""
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    return max(twos, fives) if den == 1 else None


def format_scalar(x: ScalarLike) -> str:
    """Canonical text form of an exact scalar.

    Integers render bare ("3"), rationals whose denominator divides a power
    of ten as terminating decimals ("0.5"), everything else as "p/q".
    """
    x = as_scalar(x)
    num, den = x.numerator, x.denominator
    if den == 1:
        return str(num)
    places = _decimal_places(den)
    if places is None:
        return f"{num}/{den}"
    digits = abs(num) * 10**places // den
    whole, frac = divmod(digits, 10**places)
    sign = "-" if num < 0 else ""
    return f"{sign}{whole}.{str(frac).zfill(places).rstrip('0')}"


def parse_scalar(text: str) -> Fraction:
    """Inverse of format_scalar; accepts "3", "-0.25", and "p/q" forms."""
    return Fraction(text)


@dataclass(frozen=True)
class Interval:
    """Closed nondegenerate interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_scalar(self.lo))
        object.__setattr__(self, "hi", as_scalar(self.hi))
        if self.lo >= self.hi:
            raise DegenerateInterval(
                f"need lo < hi, got [{format_scalar(self.lo)}, {format_scalar(self.hi)}]"
            )

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: ScalarLike) -> bool:
        return self.lo <= as_scalar(x) <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def as_pair(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)

    def __repr__(self) -> str:
        return f"[{format_scalar(self.lo)}, {format_scalar(self.hi)}]"


def make_interval(lo: ScalarLike, hi: ScalarLike) -> Interval:
    """Closed interval [lo, hi]; raises DegenerateInterval unless lo < hi."""
    return Interval(lo, hi)


@dataclass(frozen=True)
class Brick:
    """Product of closed intervals: an axis-aligned box with nonempty interior."""

    sides: tuple[Interval, ...]

    def __post_init__(self) -> None:
        sides = tuple(self.sides)
        if not sides:
            raise DimensionMismatch("a brick needs at least one side")
        object.__setattr__(self, "sides", sides)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[ScalarLike]]) -> "Brick":
        """Build from [(lo, hi), ...] pairs, one per axis."""
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs))

    @property
    def dim(self) -> int:
        return len(self.sides)

    @property
    def volume(self) -> Fraction:
        v = Fraction(1)
        for s in self.sides:
            v *= s.length
        return v

    def as_pairs(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(s.as_pair() for s in self.sides)

    def contains_point(self, point: Sequence[ScalarLike]) -> bool:
        if len(point) != self.dim:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, brick has dimension {self.dim}"
            )
        return all(s.contains(c) for s, c in zip(self.sides, point))

    def center(self) -> Point:
        return tuple(s.midpoint for s in self.sides)

    def corners(self) -> Iterator[Point]:
        yield from product(*(s.as_pair() for s in self.sides))

    def replace_side(self, axis_index: int, interval: Interval) -> "Brick":
        """Copy with the 0-based axis_index side replaced."""
        sides = list(self.sides)
        sides[axis_index] = interval
        return Brick(tuple(sides))

    def translate(self, offset: Sequence[ScalarLike]) -> "Brick":
        if len(offset) != self.dim:
            raise DimensionMismatch("offset dimension differs from brick dimension")
        return Brick(
            tuple(
                Interval(s.lo + as_scalar(o), s.hi + as_scalar(o))
                for s, o in zip(self.sides, offset)
            )
        )

    def __repr__(self) -> str:
        return "x".join(repr(s) for s in self.sides)


def interiors_disjoint(a: Brick, b: Brick) -> bool:
    """True iff the open interiors of a and b do not meet.

    Equivalent test: some axis has overlap length <= 0 between the two
    closed intervals, so sharing a face still counts as disjoint.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    return any(
        min(sa.hi, sb.hi) <= max(sa.lo, sb.lo) for sa, sb in zip(a.sides, b.sides)
    )


@dataclass(frozen=True)
class BreakpointGrid:
    """Per-axis sorted distinct endpoints of a brick set.

    The open boxes between consecutive breakpoints are the elementary cells;
    no input brick endpoint falls strictly inside a cell, so per axis a cell
    is entirely inside or entirely outside each input brick's interval.
    """

    axes: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> tuple[int, ...]:
        """Number of elementary cells per axis."""
        return tuple(len(a) - 1 for a in self.axes)

    def cell_bounds(self, axis_index: int, i: int) -> tuple[Fraction, Fraction]:
        a = self.axes[axis_index]
        return (a[i], a[i + 1])

    def cell_midpoint(self, axis_index: int, i: int) -> Fraction:
        lo, hi = self.cell_bounds(axis_index, i)
        return (lo + hi) / 2

    def midpoint(self, cell: Sequence[int]) -> Point:
        """Exact midpoint representative of an elementary cell."""
        return tuple(self.cell_midpoint(a, i) for a, i in enumerate(cell))

    def iter_cells(self) -> Iterator[tuple[int, ...]]:
        yield from product(*(range(n) for n in self.shape))

    def cell_span(self, axis_index: int, interval: Interval) -> tuple[int, int]:
        """Half-open cell-index range covered by an interval on this axis.

        Both endpoints must be breakpoints of the axis (true for any interval
        of a brick the grid was built from).
        """
        axis = self.axes[axis_index]
        lo = bisect_left(axis, interval.lo)
        hi = bisect_left(axis, interval.hi)
        if lo >= len(axis) or axis[lo] != interval.lo or hi >= len(axis) or axis[hi] != interval.hi:
            raise ValueError(f"interval {interval!r} endpoints are not breakpoints")
        return (lo, hi)


def build_grid(parent: Brick, bricks: Iterable[Brick]) -> BreakpointGrid:
    """Joint breakpoint grid of a brick set inside a parent.

    Collects every interval endpoint per axis (plus the parent's), sorted and
    deduplicated; raises BrickOutsideParent if any endpoint lies strictly
    outside the parent.
    """
    bricks = tuple(bricks)
    for idx, b in enumerate(bricks):
        if b.dim != parent.dim:
            raise DimensionMismatch(
                f"brick {idx} has dimension {b.dim}, parent has {parent.dim}"
            )
        for a, (side, pside) in enumerate(zip(b.sides, parent.sides)):
            if side.lo < pside.lo or side.hi > pside.hi:
                raise BrickOutsideParent(
                    f"brick {idx} axis {a + 1} interval {side!r} leaves parent {pside!r}"
                )
    axes = []
    for a, pside in enumerate(parent.sides):
        points = {pside.lo, pside.hi}
        for b in bricks:
            points.add(b.sides[a].lo)
            points.add(b.sides[a].hi)
        axes.append(tuple(sorted(points)))
    return BreakpointGrid(tuple(axes))
