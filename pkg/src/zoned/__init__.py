"""Zone diagrams and double zone diagrams over finite generalized metric
spaces: dominance operators, monotone fixed-point iteration, brute-force
enumeration, uniqueness certification, and a one-player coloring game."""

from .core import (
    EmptyPointSetError,
    MSpace,
    PointSet,
    RegionTuple,
    TupleMismatchError,
    dist_point_set,
    dominance_region,
    dominance_tuple,
    tuple_intersection,
    tuple_leq,
    tuple_union,
    validate_mspace,
)
from .engine import (
    BoundExceededError,
    CapExceededError,
    IterationTrace,
    NotDoubleZoneError,
    OrderNotTwoError,
    ZoneResult,
    brute_force_fixed_points,
    iterate_double_zone,
    verify_double_zone,
    verify_zone,
    zone_from_double,
    zone_order2,
)
from .game import (
    GamePolicy,
    GameState,
    MoveRecord,
    game_run,
    game_step,
    initial_state,
    is_stable,
)
from .spaces import (
    Fixture,
    SpaceSpec,
    build_space,
    digraph_space,
    fixture,
    grid2d_space,
    isolated_union_space,
    line_grid_space,
    line_space,
    matrix_space,
    random_mspace,
    random_site_tuple,
    two_value_space,
    two_value_zone_family_check,
)
from .uniqueness import (
    UniquenessReport,
    interval_recurrence,
    recurrence_vs_grid,
    uniqueness_check,
)

__version__ = "0.1.0"
