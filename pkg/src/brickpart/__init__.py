"""Exact-arithmetic tools for k-piercing and k-slicing brick partitions:
constructions, validation, flat-counting metrics, exhaustive small-case
search, and a canonical interchange/export surface.
"""

from .constructions import (
    BoundKind,
    BoundValue,
    bounds,
    elementary_piercing_lb,
    grid_partition,
    piercing_2d,
    piercing_3d,
    piercing_3d_base,
    slicing_3d,
    slicing_3d_base,
)
from .errors import (
    BadAxis,
    BadCodimension,
    BadDimensionForFormat,
    BadK,
    BrickError,
    BrickOutsideParent,
    ConstructionInvalid,
    DegenerateInterval,
    DimensionMismatch,
    ParseError,
    QueryOutsideParent,
    ResourceLimit,
)
from .geometry import (
    BreakpointGrid,
    Brick,
    Interval,
    Scalar,
    as_scalar,
    build_grid,
    format_scalar,
    interiors_disjoint,
    make_interval,
    parse_scalar,
)
from .io_cli import (
    ExportOptions,
    FigureFormat,
    PartitionDocument,
    emit_document,
    export_figure,
    parse_document,
)
from .metrics import (
    FlatProfile,
    FlatQuery,
    count_intersections,
    hit_members,
    min_flat_count,
    piercing_number,
    slicing_number,
)
from .partition import (
    BrickPartition,
    Failure,
    FailureKind,
    IncidenceReport,
    ValidationReport,
    boundary_incidence,
    cut,
    parent_corners_contained,
    refine,
    validate,
)
from .sampling import random_split_partition
from .search import (
    GridCapNote,
    MinSizeResult,
    Mode,
    SearchOutcome,
    SearchProblem,
    SearchStatus,
    exists_partition,
    iter_solutions,
    min_partition_size,
)

__version__ = "0.1.0"
