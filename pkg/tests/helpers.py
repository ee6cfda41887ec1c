"""Independent oracles and generators shared across the test modules.

The naive dominance routines below deliberately avoid the library's
vectorized path: they walk points one by one through the scalar distance
accessor, so they can serve as an independent check of the fast route.
"""

import random

from zoned import MSpace, PointSet, RegionTuple


def naive_dom(space: MSpace, p: PointSet, a: PointSet) -> PointSet:
    members = []
    for x in range(space.size):
        dp = min(space.dist(x, y) for y in p)
        da = min(space.dist(x, y) for y in a)
        if dp <= da:
            members.append(x)
    return PointSet.from_indices(members, space.size)


def naive_dom_tuple(space: MSpace, sites: RegionTuple, regions: RegionTuple) -> RegionTuple:
    out = []
    for k in range(sites.k_count):
        out.append(naive_dom(space, sites[k], regions.rest_union(k)))
    return RegionTuple(out)


def tuple_of(space_size: int, *index_lists) -> RegionTuple:
    return RegionTuple.of_indices(list(index_lists), space_size)


def random_region_between(rng: random.Random, lo: PointSet, size: int) -> PointSet:
    free = ((1 << size) - 1) & ~lo.mask
    extra = rng.randrange(0, free + 1) & free if free else 0
    return PointSet(lo.mask | extra, size)
