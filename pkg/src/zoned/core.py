"""Dominance regions over finite generalized metric spaces.

The model: a finite point set with a distance function d into [-inf, inf]
that is only required to satisfy d(x, x) <= d(x, y).  No symmetry,
nonnegativity, or triangle inequality is assumed.  The dominance region of
a site set P against a rival set A is the set of points at least as close
to P as to A (ties included).  Region tuples carry one dominance region
per site index and form a complete lattice under component-wise inclusion,
which is what makes fixed-point iteration over them well behaved.

All point sets are bit-vectors over dense indices 0..n-1; distance lookups
are backed by a dense matrix, so repeated queries are pure by construction
and evaluation order cannot affect results.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

# Sentinels for +/-inf in exact-integer distance matrices.  They are only
# ever compared or min-reduced, never used in arithmetic.
INT_INF = np.iinfo(np.int64).max
INT_NEG_INF = np.iinfo(np.int64).min

_FINITE_LIMIT = 1 << 62  # keep exact entries clear of the sentinels


class EmptyPointSetError(ValueError):
    """A set argument that must be nonempty was empty."""


class TupleMismatchError(ValueError):
    """Region tuples with different component counts were combined."""


def _bits_to_indices(mask: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    buf = mask.to_bytes(nbytes, "little")
    bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")
    return np.flatnonzero(bits[:size])


class PointSet:
    """Immutable subset of the point indices 0..size-1, stored as a bitmask."""

    __slots__ = ("mask", "size", "_idx")

    def __init__(self, mask: int, size: int):
        if size < 0:
            raise ValueError(f"negative universe size {size}")
        if mask < 0 or mask >> size:
            raise ValueError("mask has bits outside the universe")
        self.mask = mask
        self.size = size
        self._idx = None

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "PointSet":
        mask = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f"point index {i} outside 0..{size - 1}")
            mask |= 1 << i
        return cls(mask, size)

    @classmethod
    def from_bool(cls, flags: np.ndarray) -> "PointSet":
        flags = np.asarray(flags, dtype=bool)
        packed = np.packbits(flags, bitorder="little")
        return cls(int.from_bytes(packed.tobytes(), "little"), len(flags))

    @classmethod
    def full(cls, size: int) -> "PointSet":
        return cls((1 << size) - 1, size)

    @classmethod
    def empty(cls, size: int) -> "PointSet":
        return cls(0, size)

    def indices(self) -> np.ndarray:
        if self._idx is None:
            self._idx = _bits_to_indices(self.mask, self.size)
        return self._idx

    def to_bool(self) -> np.ndarray:
        flags = np.zeros(self.size, dtype=bool)
        flags[self.indices()] = True
        return flags

    def complement(self) -> "PointSet":
        return PointSet(~self.mask & ((1 << self.size) - 1), self.size)

    def with_point(self, i: int) -> "PointSet":
        return PointSet(self.mask | (1 << i), self.size)

    def without_point(self, i: int) -> "PointSet":
        return PointSet(self.mask & ~(1 << i), self.size)

    def issubset(self, other: "PointSet") -> bool:
        self._check_universe(other)
        return self.mask | other.mask == other.mask

    def _check_universe(self, other: "PointSet") -> None:
        if self.size != other.size:
            raise ValueError("point sets live in different universes")

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check_universe(other)
        return PointSet(self.mask | other.mask, self.size)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check_universe(other)
        return PointSet(self.mask & other.mask, self.size)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check_universe(other)
        return PointSet(self.mask & ~other.mask, self.size)

    def __xor__(self, other: "PointSet") -> "PointSet":
        self._check_universe(other)
        return PointSet(self.mask ^ other.mask, self.size)

    def __le__(self, other: "PointSet") -> bool:
        return self.issubset(other)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.size and bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices().tolist())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PointSet)
            and self.mask == other.mask
            and self.size == other.size
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.size))

    def __repr__(self) -> str:
        members = "{" + ", ".join(map(str, self)) + "}"
        return f"PointSet({members}, size={self.size})"


class RegionTuple:
    """Tuple of k >= 2 point sets over one space; all operations component-wise."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[PointSet]):
        comps = tuple(components)
        if len(comps) < 2:
            raise ValueError("a region tuple needs at least 2 components")
        sizes = {c.size for c in comps}
        if len(sizes) != 1:
            raise ValueError("components live in different universes")
        self.components = comps

    @classmethod
    def of_indices(cls, index_lists: Sequence[Iterable[int]], size: int) -> "RegionTuple":
        return cls(PointSet.from_indices(ix, size) for ix in index_lists)

    @classmethod
    def full(cls, size: int, k_count: int) -> "RegionTuple":
        return cls(PointSet.full(size) for _ in range(k_count))

    @property
    def k_count(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return self.components[0].size

    def union(self, other: "RegionTuple") -> "RegionTuple":
        self._check_shape(other)
        return RegionTuple(a | b for a, b in zip(self.components, other.components))

    def intersection(self, other: "RegionTuple") -> "RegionTuple":
        self._check_shape(other)
        return RegionTuple(a & b for a, b in zip(self.components, other.components))

    def leq(self, other: "RegionTuple") -> bool:
        self._check_shape(other)
        return all(a.issubset(b) for a, b in zip(self.components, other.components))

    def rest_union(self, k: int) -> PointSet:
        """Union of every component except the k-th."""
        out = PointSet.empty(self.size)
        for j, comp in enumerate(self.components):
            if j != k:
                out = out | comp
        return out

    def mask_key(self) -> tuple[int, ...]:
        return tuple(c.mask for c in self.components)

    def _check_shape(self, other: "RegionTuple") -> None:
        if self.k_count != other.k_count:
            raise TupleMismatchError(
                f"component counts differ: {self.k_count} vs {other.k_count}"
            )
        if self.size != other.size:
            raise ValueError("tuples live in different universes")

    def __getitem__(self, k: int) -> PointSet:
        return self.components[k]

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.components)

    def __len__(self) -> int:
        return self.k_count

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RegionTuple)
            and self.size == other.size
            and self.mask_key() == other.mask_key()
        )

    def __hash__(self) -> int:
        return hash((self.size, self.mask_key()))

    def __repr__(self) -> str:
        inner = ", ".join(repr(sorted(c)) for c in self.components)
        return f"RegionTuple({inner})"


def tuple_leq(a: RegionTuple, b: RegionTuple) -> bool:
    return a.leq(b)


def tuple_union(a: RegionTuple, b: RegionTuple) -> RegionTuple:
    return a.union(b)


def tuple_intersection(a: RegionTuple, b: RegionTuple) -> RegionTuple:
    return a.intersection(b)


class MSpace:
    """Finite point set with a dense distance matrix into [-inf, inf].

    Two scalar backends:

    * ``"exact"``: int64 entries, with INT_INF / INT_NEG_INF standing in for
      the infinities.  Used for integer grids; Euclidean grids store squared
      distances, which give the same order, minima, and ties as the true
      distances.
    * ``"float"``: float64 entries, infinities native, NaN rejected.

    The matrix is the memoized form of the distance function: lookups are
    pure, so dominance evaluation is deterministic regardless of how the
    per-point work is batched.
    """

    __slots__ = ("matrix", "scalar_kind", "geometry")

    def __init__(self, matrix: np.ndarray, scalar_kind: str, geometry=None):
        if scalar_kind not in ("exact", "float"):
            raise ValueError(f"unknown scalar kind {scalar_kind!r}")
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("distance matrix must be square")
        if matrix.shape[0] < 1:
            raise ValueError("a space needs at least one point")
        if scalar_kind == "exact":
            if not np.issubdtype(matrix.dtype, np.integer):
                raise ValueError("exact spaces need an integer matrix")
            matrix = matrix.astype(np.int64, copy=False)
            finite = (matrix != INT_INF) & (matrix != INT_NEG_INF)
            if np.abs(matrix[finite]).max(initial=0) >= _FINITE_LIMIT:
                raise ValueError("exact distances too large to stay clear of sentinels")
        else:
            matrix = matrix.astype(np.float64, copy=False)
            if np.isnan(matrix).any():
                raise ValueError("NaN is not a valid distance")
        self.matrix = matrix
        self.matrix.setflags(write=False)
        self.scalar_kind = scalar_kind
        self.geometry = geometry

    @classmethod
    def exact(cls, rows, geometry=None) -> "MSpace":
        """Build an exact space from rows that may contain +/-math.inf."""
        arr = np.asarray(rows)
        if np.issubdtype(arr.dtype, np.integer):
            return cls(arr, "exact", geometry)
        out = np.empty(arr.shape, dtype=np.int64)
        pos = arr == math.inf
        neg = arr == -math.inf
        finite = ~(pos | neg)
        if not (arr[finite] == np.round(arr[finite])).all():
            raise ValueError("exact spaces need integer finite distances")
        out[finite] = arr[finite].astype(np.int64)
        out[pos] = INT_INF
        out[neg] = INT_NEG_INF
        return cls(out, "exact", geometry)

    @classmethod
    def floating(cls, rows, geometry=None) -> "MSpace":
        return cls(np.asarray(rows, dtype=np.float64), "float", geometry)

    @classmethod
    def from_callable(cls, size: int, fn, scalar_kind: str = "float", geometry=None) -> "MSpace":
        if scalar_kind == "exact":
            out = np.empty((size, size), dtype=np.int64)
            for x in range(size):
                for y in range(size):
                    v = fn(x, y)
                    if v == math.inf:
                        out[x, y] = INT_INF
                    elif v == -math.inf:
                        out[x, y] = INT_NEG_INF
                    else:
                        out[x, y] = v
            return cls(out, "exact", geometry)
        rows = [[fn(x, y) for y in range(size)] for x in range(size)]
        return cls.floating(rows, geometry)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def _to_scalar(self, raw) -> int | float:
        if self.scalar_kind == "exact":
            v = int(raw)
            if v == INT_INF:
                return math.inf
            if v == INT_NEG_INF:
                return -math.inf
            return v
        return float(raw)

    def dist(self, x: int, y: int) -> int | float:
        return self._to_scalar(self.matrix[x, y])

    def distances_to_set(self, ps: PointSet) -> np.ndarray:
        """Raw vector of d(x, ps) for every x; sentinels preserved."""
        if not ps:
            raise EmptyPointSetError("distance to the empty set is undefined")
        return self.matrix[:, ps.indices()].min(axis=1)

    def point_to_set_raw(self, x: int, ps: PointSet):
        if not ps:
            raise EmptyPointSetError("distance to the empty set is undefined")
        return self.matrix[x, ps.indices()].min()

    def __repr__(self) -> str:
        return f"MSpace(size={self.size}, scalar_kind={self.scalar_kind!r})"


def validate_mspace(space: MSpace) -> tuple[bool, list[tuple[int, int]]]:
    """Check d(x, x) <= d(x, y) for every ordered pair; list the violations."""
    diag = space.matrix.diagonal()
    bad = space.matrix < diag[:, None]
    xs, ys = np.nonzero(bad)
    violations = list(zip(xs.tolist(), ys.tolist()))
    return not violations, violations


def dist_point_set(space: MSpace, x: int, a: PointSet) -> int | float:
    """Distance from point x to the nonempty set a (minimum over members)."""
    return space._to_scalar(space.point_to_set_raw(x, a))


def _check_eps(space: MSpace, eps: float) -> None:
    if eps and space.scalar_kind == "exact":
        raise ValueError("tolerance is only meaningful on float spaces")
    if eps < 0 or math.isnan(eps):
        raise ValueError(f"bad tolerance {eps}")


def dominance_region(space: MSpace, p: PointSet, a: PointSet, eps: float = 0.0) -> PointSet:
    """Points at least as close to p as to a: {x : d(x, p) <= d(x, a) + eps}.

    Ties belong to the region, so p itself is always included and the result
    never exceeds the whole space.
    """
    _check_eps(space, eps)
    if not p:
        raise EmptyPointSetError("dominance needs a nonempty site set")
    if not a:
        raise EmptyPointSetError("dominance needs a nonempty rival set")
    dp = space.distances_to_set(p)
    da = space.distances_to_set(a)
    if eps:
        da = da + eps
    return PointSet.from_bool(dp <= da)


def dominance_tuple(space: MSpace, sites: RegionTuple, regions: RegionTuple,
                    eps: float = 0.0) -> RegionTuple:
    """One synchronous update: component k becomes the dominance region of
    sites[k] against the union of every other region."""
    _check_eps(space, eps)
    sites._check_shape(regions)
    for comp in sites:
        if not comp:
            raise EmptyPointSetError("every site component must be nonempty")
    for comp in regions:
        if not comp:
            raise EmptyPointSetError("every region component must be nonempty")
    # d(x, union of others) = min over the others of d(x, each); computing the
    # per-component vectors once keeps the update O(k) reductions.
    site_d = [space.distances_to_set(p) for p in sites]
    region_d = [space.distances_to_set(r) for r in regions]
    out = []
    for k in range(regions.k_count):
        rest = [region_d[j] for j in range(regions.k_count) if j != k]
        if not rest:
            raise EmptyPointSetError("union of the other regions is empty")
        d_rest = np.minimum.reduce(rest)
        if eps:
            d_rest = d_rest + eps
        out.append(PointSet.from_bool(site_d[k] <= d_rest))
    return RegionTuple(out)
