"""Space constructors and worked fixtures.

Families: explicit distance matrices, points on a line, uniform 1-D and 2-D
grids (l1 / l2 / linf), directed graphs under shortest-path distance,
isolated unions of segments, and two-value spaces.  Grid spaces are scaled
to integer coordinates so that every comparison is exact; Euclidean grids
store squared distances (an order-preserving surrogate).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .core import (
    INT_INF,
    INT_NEG_INF,
    MSpace,
    PointSet,
    RegionTuple,
    validate_mspace,
)


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        # str() round-trips the decimal literal the user wrote (0.01 -> 1/100)
        return Fraction(str(value))
    return Fraction(value)


class Line1D:
    """Uniform 1-D grid geometry: point i sits at origin + i*step."""

    __slots__ = ("origin", "step", "count")

    def __init__(self, origin: Fraction, step: Fraction, count: int):
        self.origin = origin
        self.step = step
        self.count = count

    def coord(self, i: int) -> Fraction:
        return self.origin + i * self.step

    def floor_index(self, value) -> int:
        """Largest grid index whose coordinate is <= value."""
        return math.floor((_as_fraction(value) - self.origin) / self.step)

    def ceil_index(self, value) -> int:
        return math.ceil((_as_fraction(value) - self.origin) / self.step)

    def coord_cells(self, value) -> list[int]:
        """Indices within half a step of the given coordinate."""
        q = (_as_fraction(value) - self.origin) / self.step
        return [i for i in range(self.count) if abs(q - i) <= Fraction(1, 2)]


class LinePoints:
    """Arbitrary (not necessarily uniform) points on a line."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        self.coords = tuple(coords)

    def coord_cells(self, value) -> list[int]:
        return [i for i, c in enumerate(self.coords) if c == value]


class Grid2D:
    """Axis-aligned 2-D grid, scaled so cell coordinates are integers.

    Point index = ix_rel * ny + iy_rel (x-major).  Distances are in step
    units for l1/linf and squared step units for l2.
    """

    __slots__ = ("step", "norm", "ix0", "ix1", "iy0", "iy1", "sx", "sy")

    def __init__(self, step: Fraction, norm: str, ix0: int, ix1: int, iy0: int, iy1: int):
        if norm not in ("l1", "l2", "linf"):
            raise ValueError(f"unknown norm {norm!r}")
        if ix1 < ix0 or iy1 < iy0:
            raise ValueError("empty grid extent")
        self.step = step
        self.norm = norm
        self.ix0, self.ix1, self.iy0, self.iy1 = ix0, ix1, iy0, iy1
        gx, gy = np.meshgrid(
            np.arange(ix0, ix1 + 1, dtype=np.int64),
            np.arange(iy0, iy1 + 1, dtype=np.int64),
            indexing="ij",
        )
        self.sx = gx.ravel()
        self.sy = gy.ravel()

    @property
    def nx(self) -> int:
        return self.ix1 - self.ix0 + 1

    @property
    def ny(self) -> int:
        return self.iy1 - self.iy0 + 1

    @property
    def size(self) -> int:
        return self.nx * self.ny

    def cell_index(self, ix: int, iy: int) -> int:
        if not (self.ix0 <= ix <= self.ix1 and self.iy0 <= iy <= self.iy1):
            raise ValueError(f"cell ({ix}, {iy}) outside the grid")
        return (ix - self.ix0) * self.ny + (iy - self.iy0)

    def point_cells(self, x, y) -> list[int]:
        """Cells whose half-step box contains the point (x, y)."""
        qx = _as_fraction(x) / self.step
        qy = _as_fraction(y) / self.step
        half = Fraction(1, 2)
        out = []
        for ix in range(math.ceil(qx - half), math.floor(qx + half) + 1):
            for iy in range(math.ceil(qy - half), math.floor(qy + half) + 1):
                if self.ix0 <= ix <= self.ix1 and self.iy0 <= iy <= self.iy1:
                    out.append(self.cell_index(ix, iy))
        if not out:
            raise ValueError(f"point ({x}, {y}) maps to no grid cell")
        return out

    def radial2(self) -> np.ndarray:
        """Squared distance from the origin, in step units, per cell."""
        return self.sx**2 + self.sy**2

    def circle_cells(self, radius) -> np.ndarray:
        """Boolean mask of cells within half a step of the circle |x| = radius."""
        q = _as_fraction(radius) / self.step
        if q < 0:
            raise ValueError("radius must be nonnegative")
        lo = max(q - Fraction(1, 2), Fraction(0)) ** 2
        hi = (q + Fraction(1, 2)) ** 2
        r2 = self.radial2()
        # exact comparison: scale the rational bounds onto the integers
        lo_n, lo_d = lo.numerator, lo.denominator
        hi_n, hi_d = hi.numerator, hi.denominator
        return (r2 * lo_d >= lo_n) & (r2 * hi_d <= hi_n)

    def to_meta(self) -> dict:
        return {
            "step": str(self.step),
            "norm": self.norm,
            "ix": [self.ix0, self.ix1],
            "iy": [self.iy0, self.iy1],
        }

    @classmethod
    def from_meta(cls, meta: dict) -> "Grid2D":
        return cls(
            Fraction(meta["step"]),
            meta["norm"],
            meta["ix"][0],
            meta["ix"][1],
            meta["iy"][0],
            meta["iy"][1],
        )


def matrix_space(rows, scalar_kind: str | None = None) -> MSpace:
    """Space from an explicit matrix; integer entries (plus inf) go exact."""
    arr = np.asarray(rows, dtype=object)
    flat = [v for v in arr.ravel()]
    if scalar_kind is None:
        exact = all(
            isinstance(v, (int, np.integer)) or v in (math.inf, -math.inf)
            or (isinstance(v, float) and v.is_integer())
            for v in flat
        )
        scalar_kind = "exact" if exact else "float"
    n = arr.shape[0]
    if scalar_kind == "exact":
        return MSpace.from_callable(n, lambda x, y: arr[x, y], "exact")
    return MSpace.floating(arr.astype(np.float64))


def line_space(coords: Sequence) -> MSpace:
    """Points on the real line under |x - y|; integer coordinates go exact."""
    if len(coords) < 1:
        raise ValueError("a line space needs at least one point")
    geometry = LinePoints(coords)
    if all(isinstance(c, (int, np.integer)) for c in coords):
        arr = np.asarray(coords, dtype=np.int64)
        return MSpace(np.abs(arr[:, None] - arr[None, :]), "exact", geometry)
    arr = np.asarray(coords, dtype=np.float64)
    return MSpace(np.abs(arr[:, None] - arr[None, :]), "float", geometry)


def line_grid_space(start, stop, step) -> MSpace:
    """Uniform 1-D grid from start to stop; exact distances in step units."""
    start, stop, step = _as_fraction(start), _as_fraction(stop), _as_fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    span = (stop - start) / step
    if span.denominator != 1 or span < 0:
        raise ValueError("step must divide the extent evenly")
    count = int(span) + 1
    idx = np.arange(count, dtype=np.int64)
    matrix = np.abs(idx[:, None] - idx[None, :])
    return MSpace(matrix, "exact", Line1D(start, step, count))


def grid2d_space(xmin, xmax, ymin, ymax, step=1, norm: str = "l2") -> MSpace:
    """2-D grid under the chosen norm; l2 stores squared distances."""
    step = _as_fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    bounds = []
    for v in (xmin, xmax, ymin, ymax):
        q = _as_fraction(v) / step
        if q.denominator != 1:
            raise ValueError("grid extent must be a multiple of the step")
        bounds.append(int(q))
    grid = Grid2D(step, norm, bounds[0], bounds[1], bounds[2], bounds[3])
    dx = np.abs(grid.sx[:, None] - grid.sx[None, :])
    dy = np.abs(grid.sy[:, None] - grid.sy[None, :])
    if norm == "l1":
        matrix = dx + dy
    elif norm == "linf":
        matrix = np.maximum(dx, dy)
    else:
        matrix = dx * dx + dy * dy
    return MSpace(matrix, "exact", grid)


def digraph_space(n: int, arcs: Sequence[tuple]) -> MSpace:
    """Directed graph with minimal-path-length distances, inf if unreachable."""
    if n < 1:
        raise ValueError("a graph space needs at least one vertex")
    weights = np.full((n, n), np.inf)
    for u, v, w in arcs:
        if w < 0:
            raise ValueError(f"arc ({u}, {v}) has negative length {w}")
        weights[u, v] = min(weights[u, v], w)
    dist = shortest_path(weights, method="D", directed=True)
    np.fill_diagonal(dist, 0.0)
    return MSpace(dist, "float")


def isolated_union_space(components: Sequence[Sequence[tuple]]) -> MSpace:
    """Union of planar point components; within a shared component the
    distance is squared Euclidean, across components it is +inf.

    A coordinate appearing in several components is a single point of the
    space, reachable through each of them.
    """
    if not components or not any(components):
        raise ValueError("need at least one nonempty component")
    index: dict[tuple, int] = {}
    member_sets = []
    for comp in components:
        members = []
        for xy in comp:
            key = (int(xy[0]), int(xy[1]))
            if key not in index:
                index[key] = len(index)
            members.append(index[key])
        member_sets.append(members)
    n = len(index)
    coords = np.empty((n, 2), dtype=np.int64)
    for (x, y), i in index.items():
        coords[i] = (x, y)
    matrix = np.full((n, n), INT_INF, dtype=np.int64)
    for members in member_sets:
        ids = np.asarray(sorted(set(members)), dtype=np.int64)
        sub = coords[ids]
        d2 = ((sub[:, None, :] - sub[None, :, :]) ** 2).sum(axis=2)
        current = matrix[np.ix_(ids, ids)]
        matrix[np.ix_(ids, ids)] = np.minimum(current, d2)
    return MSpace(matrix, "exact")


def two_value_space(n: int, a, b) -> MSpace:
    """d(x, x) = a < b = d(x, y); usually not a metric."""
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    if n < 1:
        raise ValueError("a two-value space needs at least one point")
    if isinstance(a, int) and isinstance(b, int):
        matrix = np.full((n, n), b, dtype=np.int64)
        np.fill_diagonal(matrix, a)
        return MSpace(matrix, "exact")
    matrix = np.full((n, n), float(b))
    np.fill_diagonal(matrix, float(a))
    return MSpace(matrix, "float")


@dataclass(frozen=True)
class SpaceSpec:
    """Declarative space description with a canonical JSON form."""

    kind: str
    params: dict

    _KINDS = (
        "finite-matrix",
        "line-points",
        "grid-2d",
        "digraph",
        "isolated-union",
        "two-value",
    )

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown space kind {self.kind!r}")


def build_space(spec: SpaceSpec) -> MSpace:
    kind, p = spec.kind, spec.params
    try:
        if kind == "finite-matrix":
            return matrix_space(p["entries"], p.get("scalar_kind"))
        if kind == "line-points":
            if "coords" in p:
                return line_space(p["coords"])
            return line_grid_space(p["start"], p["stop"], p["step"])
        if kind == "grid-2d":
            return grid2d_space(
                p["xmin"], p["xmax"], p["ymin"], p["ymax"],
                p.get("step", 1), p.get("norm", "l2"),
            )
        if kind == "digraph":
            return digraph_space(p["n"], [tuple(a) for a in p["arcs"]])
        if kind == "isolated-union":
            return isolated_union_space(p["components"])
        if kind == "two-value":
            return two_value_space(p["n"], p["a"], p["b"])
    except KeyError as missing:
        raise ValueError(f"space kind {kind!r} is missing parameter {missing}") from None
    raise ValueError(f"unknown space kind {kind!r}")


# ---------------------------------------------------------------------------
# Worked fixtures
# ---------------------------------------------------------------------------


@dataclass
class Fixture:
    name: str
    space: MSpace
    sites: RegionTuple
    expected: object


class IntervalExpectation:
    """Grid restriction of ([-3, -1], [1, 3]) with a one-cell band at the
    interior boundaries -1 and 1."""

    def __init__(self, space: MSpace):
        self.space = space
        line: Line1D = space.geometry
        self.left_boundary = line.floor_index(-1)
        self.right_boundary = line.ceil_index(1)

    def exact_tuple(self) -> RegionTuple:
        n = self.space.size
        left = PointSet.from_indices(range(0, self.left_boundary + 1), n)
        right = PointSet.from_indices(range(self.right_boundary, n), n)
        return RegionTuple([left, right])

    def check(self, result: RegionTuple) -> bool:
        n = self.space.size
        idx0 = result[0].indices()
        idx1 = result[1].indices()
        # components must be contiguous runs anchored at the ends
        if idx0[0] != 0 or len(idx0) != idx0[-1] + 1:
            return False
        if idx1[-1] != n - 1 or len(idx1) != n - idx1[0]:
            return False
        return (
            abs(int(idx0[-1]) - self.left_boundary) <= 1
            and abs(int(idx1[0]) - self.right_boundary) <= 1
        )


class RingsExpectation:
    """Concentric annuli with a one-cell tolerance band around each boundary
    radius, compared inside the inscribed-disc window (corner cells sit
    beyond the outermost representable site ring and are not constrained)."""

    def __init__(self, space: MSpace, period: int = 6):
        self.space = space
        grid: Grid2D = space.geometry
        self.r2 = grid.radial2()
        max_radius = math.isqrt(int(self.r2.max()))
        window_radius = min(grid.ix1, -grid.ix0, grid.iy1, -grid.iy0)
        self.window = self.r2 <= window_radius**2
        self.bands = []
        self.members = []
        for offsets in ((0, 2), (3, 5)):
            boundaries = []
            member = np.zeros(space.size, dtype=bool)
            for k in range(0, max_radius // period + 2):
                lo, hi = period * k + offsets[0], period * k + offsets[1]
                member |= (self.r2 >= lo * lo) & (self.r2 <= hi * hi)
                boundaries += [lo, hi]
            band = np.zeros(space.size, dtype=bool)
            for b in boundaries:
                band |= (self.r2 >= (b - 1) ** 2) & (self.r2 <= (b + 1) ** 2)
            self.bands.append(band)
            self.members.append(member)

    def mismatches(self, result: RegionTuple) -> list[PointSet]:
        out = []
        for k in range(2):
            got = result[k].to_bool()
            bad = (got != self.members[k]) & ~self.bands[k] & self.window
            out.append(PointSet.from_bool(bad))
        return out

    def check(self, result: RegionTuple) -> bool:
        return not any(self.mismatches(result))


class MaxnormExpectation:
    """Two half-plane-like regions split by the piecewise-linear ridge
    max(|x1| - 1, 1); compared inside a centered window."""

    def __init__(self, space: MSpace, window: int = 10):
        self.space = space
        grid: Grid2D = space.geometry
        self.window_half = window
        self.in_window = (np.abs(grid.sx) <= window) & (np.abs(grid.sy) <= window)
        self.ridge = np.maximum(np.abs(grid.sx) - 1, 1)

    def formula_tuple(self) -> RegionTuple:
        grid: Grid2D = self.space.geometry
        upper = grid.sy >= self.ridge
        lower = grid.sy <= -self.ridge
        return RegionTuple([PointSet.from_bool(upper), PointSet.from_bool(lower)])

    def window_mask(self) -> PointSet:
        return PointSet.from_bool(self.in_window)

    def boundary_deviation(self, result: RegionTuple) -> int:
        """Worst per-column gap between the computed region edge and the
        ridge, over columns inside the window."""
        grid: Grid2D = self.space.geometry
        upper = result[0].to_bool()
        lower = result[1].to_bool()
        worst = 0
        for ix in range(-self.window_half, self.window_half + 1):
            col = grid.sx == ix
            ridge = int(np.abs(ix) - 1) if abs(ix) >= 2 else 1
            lo_edge = int(grid.sy[col & upper].min())
            hi_edge = int(grid.sy[col & lower].max())
            worst = max(worst, abs(lo_edge - ridge), abs(hi_edge + ridge))
        return worst

    def check(self, result: RegionTuple) -> bool:
        return self.boundary_deviation(result) <= 1


def fixture(name: str, **params) -> Fixture:
    """Named executable fixture: space, sites, and the expected answer."""
    if name == "three-point":
        space = line_space([-1, 0, 1])
        sites = RegionTuple.of_indices([[0], [2]], 3)
        expected = (
            RegionTuple.of_indices([[0], [1, 2]], 3),
            RegionTuple.of_indices([[0, 1], [2]], 3),
        )
        return Fixture(name, space, sites, expected)
    if name == "a-point":
        a = params.get("a", 0.5)
        if not 0 < a < 1:
            raise ValueError("the middle point must sit strictly inside (0, 1)")
        space = line_space([-1, a, 1])
        sites = RegionTuple.of_indices([[0], [2]], 3)
        expected = RegionTuple.of_indices([[0], [1, 2]], 3)
        return Fixture(name, space, sites, expected)
    if name == "maxnorm":
        space = grid2d_space(-20, 20, -20, 20, 1, "linf")
        grid: Grid2D = space.geometry
        p1 = PointSet.from_indices(grid.point_cells(0, 3), space.size)
        p2 = PointSet.from_indices(grid.point_cells(0, -3), space.size)
        return Fixture(name, space, RegionTuple([p1, p2]), MaxnormExpectation(space))
    if name == "rings":
        space = grid2d_space(-17, 17, -17, 17, 1, "l2")
        grid: Grid2D = space.geometry
        max_radius = math.isqrt(int(grid.radial2().max()))
        s1 = np.zeros(space.size, dtype=bool)
        s2 = np.zeros(space.size, dtype=bool)
        for k in range(0, max_radius // 6 + 1):
            s1 |= grid.circle_cells(6 * k + 1)
            if 6 * k + 4 <= max_radius + 1:
                s2 |= grid.circle_cells(6 * k + 4)
        sites = RegionTuple([PointSet.from_bool(s1), PointSet.from_bool(s2)])
        return Fixture(name, space, sites, RingsExpectation(space))
    if name == "isolated":
        horizontal = [(x, 0) for x in range(-6, 7)]
        left = [(-1, y) for y in range(-6, 9)]
        right = [(1, y) for y in range(-6, 9)]
        space = isolated_union_space([horizontal, left, right])
        lookup = {}
        for comp in (horizontal, left, right):
            for xy in comp:
                lookup.setdefault(xy, len(lookup))
        n = space.size
        sites = RegionTuple.of_indices(
            [[lookup[(-1, 0)]], [lookup[(-1, 3)]], [lookup[(1, 4)]]], n
        )
        r1 = {lookup[xy] for xy in horizontal} | {lookup[(-1, y)] for y in range(-6, 2)}
        r2 = {lookup[(-1, y)] for y in range(2, 9)}
        r3 = {lookup[(1, y)] for y in range(2, 9)}
        expected = RegionTuple.of_indices([sorted(r1), sorted(r2), sorted(r3)], n)
        return Fixture(name, space, sites, expected)
    if name == "interval":
        step = params.get("step", Fraction(1, 100))
        space = line_grid_space(-3, 3, step)
        n = space.size
        sites = RegionTuple.of_indices([[0], [n - 1]], n)
        return Fixture(name, space, sites, IntervalExpectation(space))
    raise ValueError(f"unknown fixture {name!r}")


def two_value_zone_family_check(space: MSpace, sites: RegionTuple,
                                trial_count: int, seed: int) -> bool:
    """Sample random pairwise-disjoint covering tuples extending the sites;
    every one of them must verify as a zone diagram."""
    from .engine import verify_zone

    matrix = space.matrix
    diag = matrix.diagonal()
    a = diag[0]
    off = matrix[~np.eye(space.size, dtype=bool)]
    if (diag != a).any() or off.min() != off.max() or not a < off[0]:
        raise ValueError("not a two-value space")
    taken = PointSet.empty(space.size)
    for comp in sites:
        if taken & comp:
            raise ValueError("site components must be pairwise disjoint")
        taken = taken | comp
    rng = random.Random(seed)
    free = sorted(taken.complement())
    k = sites.k_count
    for _ in range(trial_count):
        assignment = [list(comp) for comp in sites]
        for point in free:
            assignment[rng.randrange(k)].append(point)
        candidate = RegionTuple.of_indices(assignment, space.size)
        ok, _diffs = verify_zone(space, sites, candidate)
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# Random spaces for property suites
# ---------------------------------------------------------------------------


def random_mspace(rng: random.Random, size: int, value_range: tuple[int, int] = (-2, 4),
                  inf_prob: float = 0.08, neg_inf_diag_prob: float = 0.04) -> MSpace:
    """Random exact space satisfying the axiom, with occasional +/-inf
    entries; values are drawn from a small range to make ties common."""
    lo, hi = value_range
    matrix = np.empty((size, size), dtype=np.int64)
    for x in range(size):
        r = rng.random()
        if r < neg_inf_diag_prob:
            dxx = INT_NEG_INF
        elif r < neg_inf_diag_prob + 0.02:
            dxx = INT_INF
        else:
            dxx = rng.randint(lo, hi)
        matrix[x, x] = dxx
        for y in range(size):
            if y == x:
                continue
            if dxx == INT_INF or rng.random() < inf_prob:
                matrix[x, y] = INT_INF
            elif dxx == INT_NEG_INF:
                matrix[x, y] = rng.randint(lo, hi) if rng.random() < 0.9 else INT_NEG_INF
            else:
                matrix[x, y] = rng.randint(dxx, hi + 2)
    space = MSpace(matrix, "exact")
    ok, _ = validate_mspace(space)
    assert ok
    return space


def random_positive_mspace(rng: random.Random, size: int,
                           max_value: int = 4, inf_prob: float = 0.08) -> MSpace:
    """Random exact space with zero self-distance and strictly positive,
    possibly asymmetric and possibly infinite, separation.  This is the
    setting the coloring game needs for stability to mean zone diagram."""
    matrix = np.zeros((size, size), dtype=np.int64)
    for x in range(size):
        for y in range(size):
            if x != y:
                matrix[x, y] = INT_INF if rng.random() < inf_prob else rng.randint(1, max_value)
    return MSpace(matrix, "exact")


def random_point_set(rng: random.Random, size: int) -> PointSet:
    mask = rng.randrange(1, 1 << size)
    return PointSet(mask, size)


def random_site_tuple(rng: random.Random, size: int, k_count: int,
                      disjoint: bool = False, max_site_size: int = 2) -> RegionTuple:
    if disjoint:
        if size < k_count:
            raise ValueError("not enough points for disjoint sites")
        points = rng.sample(range(size), k=min(size, k_count * max_site_size))
        groups = [[] for _ in range(k_count)]
        for i, p in enumerate(points):
            if i < k_count:
                groups[i].append(p)
            elif rng.random() < 0.4:
                groups[rng.randrange(k_count)].append(p)
        return RegionTuple.of_indices(groups, size)
    comps = []
    for _ in range(k_count):
        members = rng.sample(range(size), k=rng.randint(1, max_site_size))
        comps.append(PointSet.from_indices(members, size))
    return RegionTuple(comps)
