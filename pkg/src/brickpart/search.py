"""Exhaustive canonical-order search over discrete grid partitions.

Cells are the unit cubes of [0,g]^d. The search always extends a partial
partition from the lexicographically least uncovered cell, branching over
every box whose minimum corner is that cell and whose cells are all free, so
each complete partition into at most m_max boxes is visited exactly once and
node counts are deterministic for a fixed configuration.

Pruning never cuts a feasible completion: a branch dies when (a) the box
budget is spent with cells left over, or (b/c) some flat class's met-box
count plus its uncovered cell count is below k (each uncovered cell can
contribute at most one new box to a flat).

An ExhaustedNone outcome is a nonexistence claim relative to its grid cap: a
continuous partition with m bricks normalizes to integer coordinates with at
most 2m-2 interior breakpoints per axis, so exhaustion is a full proof only
when g >= 2*m_max - 1 (recorded in the outcome's grid cap note).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

from .errors import ResourceLimit
from .geometry import Brick
from .partition import BrickPartition

NODE_BUDGET_ENV = "BRICKPART_NODE_BUDGET"
DEFAULT_NODE_BUDGET = 10**8

Box = tuple[tuple[int, ...], tuple[int, ...]]  # (corner, extents) in cells


class Mode(Enum):
    PIERCING = "piercing"  # flats are lines: one free axis
    SLICING = "slicing"  # flats are hyperplanes: one fixed axis


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED_NONE = "exhausted_none"


@dataclass(frozen=True)
class SearchProblem:
    """Configuration of one discrete minimality search.

    symmetry_pruning restricts only the first box choice to axis-sorted
    extents (axis permutations map solutions to solutions, so every orbit
    keeps a representative); node_budget None means the BRICKPART_NODE_BUDGET
    environment variable or the 10^8 default.
    """

    d: int
    k: int
    mode: Mode
    m_max: int
    g: int
    symmetry_pruning: bool = True
    node_budget: int | None = None

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 1 or self.m_max < 1 or self.g < 1:
            raise ValueError("d, k, m_max, and g must all be >= 1")
        if self.mode is Mode.SLICING and self.d < 2:
            raise ValueError("slicing mode needs d >= 2")

    def effective_node_budget(self) -> int:
        if self.node_budget is not None:
            return self.node_budget
        return int(os.environ.get(NODE_BUDGET_ENV, DEFAULT_NODE_BUDGET))


@dataclass(frozen=True)
class GridCapNote:
    """Scope of an exhaustion claim: the (g, m_max) actually searched."""

    g: int
    m_max: int
    proof_complete: bool  # g >= 2*m_max - 1: the grid expresses every m_max-brick partition

    def describe(self) -> str:
        scope = "complete" if self.proof_complete else "relative to this grid"
        return f"g={self.g}, m_max={self.m_max} ({scope})"


@dataclass
class SearchOutcome:
    status: SearchStatus
    witness: BrickPartition | None
    nodes_explored: int
    grid_cap_note: GridCapNote


class _Engine:
    """Precomputed move tables plus the DFS state for one problem."""

    def __init__(self, problem: SearchProblem):
        self.problem = problem
        d, g = problem.d, problem.g
        self.n_cells = g**d
        self.budget = problem.effective_node_budget()

        # Flat classes: lines (free axis, other-axis cell indices) for
        # piercing; slabs (normal axis, cell index) for slicing.
        flat_ids: dict[tuple, int] = {}
        flat_cells: list[int] = []
        if problem.mode is Mode.PIERCING:
            for a in range(d):
                for combo in product(range(g), repeat=d - 1):
                    flat_ids[(a, combo)] = len(flat_cells)
                    flat_cells.append(g)
        else:
            for a in range(d):
                for i in range(g):
                    flat_ids[(a, i)] = len(flat_cells)
                    flat_cells.append(g ** (d - 1))
        self.flat_cells = flat_cells

        # Candidate boxes per anchor cell: (corner, extents, bitmask over
        # cells, [(flat id, cells of the box on that flat)]).
        self.moves: list[list[tuple[tuple[int, ...], tuple[int, ...], int, list[tuple[int, int]]]]] = [
            [] for _ in range(self.n_cells)
        ]
        for corner in product(range(g), repeat=d):
            anchor = self._cell_index(corner)
            for extents in product(*(range(1, g - corner[a] + 1) for a in range(d))):
                mask = 0
                for cell in product(
                    *(range(corner[a], corner[a] + extents[a]) for a in range(d))
                ):
                    mask |= 1 << self._cell_index(cell)
                incidences: list[tuple[int, int]] = []
                if problem.mode is Mode.PIERCING:
                    for a in range(d):
                        others = [b for b in range(d) if b != a]
                        for combo in product(
                            *(range(corner[b], corner[b] + extents[b]) for b in others)
                        ):
                            incidences.append((flat_ids[(a, combo)], extents[a]))
                else:
                    for a in range(d):
                        area = 1
                        for b in range(d):
                            if b != a:
                                area *= extents[b]
                        for i in range(corner[a], corner[a] + extents[a]):
                            incidences.append((flat_ids[(a, i)], area))
                self.moves[anchor].append((corner, extents, mask, incidences))

    def _cell_index(self, coords: tuple[int, ...]) -> int:
        idx = 0
        for c in coords:
            idx = idx * self.problem.g + c
        return idx

    def solutions(self) -> Iterator[tuple[list[Box], int]]:
        """Yield (boxes, nodes_so_far) for each complete k-satisfying
        partition, in canonical order. self.nodes stays valid afterwards."""
        self.nodes = 0
        k = self.problem.k
        self.boxes_met = [0] * len(self.flat_cells)
        self.uncovered = list(self.flat_cells)
        self.stack: list[Box] = []
        if any(c < k for c in self.flat_cells):
            return  # no flat can ever meet k boxes at this grid size
        yield from self._dfs(0, 0)

    def _dfs(self, cover: int, scan_from: int) -> Iterator[tuple[list[Box], int]]:
        idx = scan_from
        while idx < self.n_cells and (cover >> idx) & 1:
            idx += 1
        if idx == self.n_cells:
            # Complete: every flat is fully decided, and the incremental
            # bound already enforced boxes_met >= k when uncovered hit 0.
            yield (list(self.stack), self.nodes)
            return
        if len(self.stack) == self.problem.m_max:
            return  # box budget spent with cells remaining
        k = self.problem.k
        first = not self.stack and self.problem.symmetry_pruning
        for corner, extents, mask, incidences in self.moves[idx]:
            if cover & mask:
                continue
            if first and any(extents[i] > extents[i + 1] for i in range(len(extents) - 1)):
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise ResourceLimit(
                    f"node budget {self.budget} exceeded at {self.nodes} placements"
                )
            feasible = True
            for f, covered in incidences:
                self.boxes_met[f] += 1
                self.uncovered[f] -= covered
            for f, _ in incidences:
                if self.boxes_met[f] + self.uncovered[f] < k:
                    feasible = False
                    break
            if feasible:
                self.stack.append((corner, extents))
                yield from self._dfs(cover | mask, idx + 1)
                self.stack.pop()
            for f, covered in incidences:
                self.boxes_met[f] -= 1
                self.uncovered[f] += covered

    def witness_partition(self, boxes: list[Box]) -> BrickPartition:
        g, d = self.problem.g, self.problem.d
        parent = Brick.from_pairs([(0, g)] * d)
        members = tuple(
            Brick.from_pairs(
                [(corner[a], corner[a] + extents[a]) for a in range(d)]
            )
            for corner, extents in boxes
        )
        return BrickPartition(parent, members)


def _cap_note(problem: SearchProblem) -> GridCapNote:
    return GridCapNote(problem.g, problem.m_max, problem.g >= 2 * problem.m_max - 1)


def exists_partition(problem: SearchProblem) -> SearchOutcome:
    """First witness in canonical order, or exhaustion at the grid cap.

    Raises ResourceLimit if the node budget runs out; that is never reported
    as ExhaustedNone.
    """
    engine = _Engine(problem)
    for boxes, nodes in engine.solutions():
        return SearchOutcome(
            SearchStatus.FOUND, engine.witness_partition(boxes), nodes, _cap_note(problem)
        )
    return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, engine.nodes, _cap_note(problem))


def iter_solutions(problem: SearchProblem) -> Iterator[BrickPartition]:
    """Every satisfying partition at the grid cap, canonical order.

    Diagnostic surface (uniqueness and count cross-checks); exists_partition
    is the production entry point.
    """
    engine = _Engine(problem)
    for boxes, _ in engine.solutions():
        yield engine.witness_partition(boxes)


@dataclass
class MinSizeResult:
    """Least member count with a witness, or exhaustion up to m_hi.

    value None means every m <= m_hi exhausted at grid g, i.e. the true
    minimum exceeds m_hi as far as this grid can tell.
    """

    value: int | None
    m_hi: int
    g: int
    nodes_total: int
    witness: BrickPartition | None


def min_partition_size(
    d: int,
    k: int,
    mode: Mode,
    m_hi: int,
    g: int,
    symmetry_pruning: bool = True,
    node_budget: int | None = None,
) -> MinSizeResult:
    """Scan m = 1..m_hi with exists_partition and report the least Found."""
    total = 0
    for m in range(1, m_hi + 1):
        outcome = exists_partition(
            SearchProblem(d, k, mode, m, g, symmetry_pruning, node_budget)
        )
        total += outcome.nodes_explored
        if outcome.status is SearchStatus.FOUND:
            return MinSizeResult(m, m_hi, g, total, outcome.witness)
    return MinSizeResult(None, m_hi, g, total, None)
