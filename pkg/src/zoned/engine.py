"""Constructive fixed-point computation for zone and double zone diagrams.

Everything here runs on finite spaces, where monotone iteration terminates:
the squared dominance update is monotone on the lattice of region tuples
sandwiched between the sites and the whole space, so iterating it from the
bottom (the sites) climbs to the minimal fixed tuple and iterating from the
top descends to the maximal one.  For two site groups the per-component
chains decouple, which yields genuine zone diagrams, not just double ones.
A brute-force enumerator over the same lattice serves as the independent
oracle at desk scale.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import (
    MSpace,
    PointSet,
    RegionTuple,
    dominance_region,
    dominance_tuple,
)


class BoundExceededError(RuntimeError):
    """Iteration ran past its a-priori step bound; that is a bug, not bad input."""


class CapExceededError(RuntimeError):
    """Requested enumeration is larger than the configured candidate cap."""


class NotDoubleZoneError(ValueError):
    """The input tuple is not fixed under the squared dominance update."""


class OrderNotTwoError(ValueError):
    """The operation is only defined for exactly two site groups."""


ASCENDING = "ascending"
DESCENDING = "descending"


@dataclass
class IterationTrace:
    """States visited by a fixed-point chain, plus step bookkeeping.

    ``monotone_components`` lists the component indices that provably move
    monotonically in ``direction``; for squared-dominance chains that is all
    of them, for one-sided order-2 chains only the driving component.
    """

    states: list[RegionTuple]
    steps: int
    bound: int
    direction: str
    monotone_components: tuple[int, ...]


@dataclass
class ZoneResult:
    regions: RegionTuple
    kind: str                      # "zone" | "double-zone"
    extremal: str                  # "minimal" | "maximal" | "unknown"
    trace: IterationTrace | None = None


def double_zone_step_bound(space: MSpace, sites: RegionTuple) -> int:
    return sum(space.size - len(p) for p in sites)


def iterate_double_zone(space: MSpace, sites: RegionTuple,
                        direction: str = ASCENDING, eps: float = 0.0) -> ZoneResult:
    """Iterate the squared dominance update to its nearest fixed tuple.

    Ascending starts at the sites and returns the minimal double zone
    diagram; descending starts at the full space and returns the maximal
    one.  The step count can never exceed the total site-free point count.
    """
    if direction not in (ASCENDING, DESCENDING):
        raise ValueError(f"unknown direction {direction!r}")
    start = sites if direction == ASCENDING else RegionTuple.full(space.size, sites.k_count)
    bound = double_zone_step_bound(space, sites)
    states = [start]
    current = start
    steps = 0
    while True:
        nxt = dominance_tuple(space, sites, dominance_tuple(space, sites, current, eps), eps)
        if nxt == current:
            break
        current = nxt
        states.append(nxt)
        steps += 1
        if steps > bound:
            raise BoundExceededError(
                f"no fixed tuple after {steps} squared updates (bound {bound})"
            )
    trace = IterationTrace(states, steps, bound, direction,
                           tuple(range(sites.k_count)))
    extremal = "minimal" if direction == ASCENDING else "maximal"
    return ZoneResult(current, "double-zone", extremal, trace)


_VARIANTS = {
    # variant: (driving index, start from sites?, direction)
    "R": (0, True, ASCENDING),
    "S": (0, False, DESCENDING),
    "Z": (1, True, ASCENDING),
    "W": (1, False, DESCENDING),
}


def zone_order2(space: MSpace, p1: PointSet, p2: PointSet,
                variant: str = "R", eps: float = 0.0) -> ZoneResult:
    """Zone diagram for two site groups by one-sided iteration.

    One component is driven to a fixed point of its own two-step dominance
    map (from its sites for variants R/Z, from the whole space for S/W),
    then the partner component is completed with a single dominance step.
    """
    variant = variant.upper()
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    drive, from_sites, direction = _VARIANTS[variant]
    sites = RegionTuple([p1, p2])
    own, partner = (p1, p2) if drive == 0 else (p2, p1)

    def two_step(a: PointSet) -> PointSet:
        return dominance_region(space, own, dominance_region(space, partner, a, eps), eps)

    def complete(a: PointSet) -> RegionTuple:
        other = dominance_region(space, partner, a, eps)
        return RegionTuple([a, other] if drive == 0 else [other, a])

    bound = space.size - len(own)
    current = own if from_sites else PointSet.full(space.size)
    states = [complete(current)]
    steps = 0
    prev_card = len(current)
    while True:
        nxt = two_step(current)
        if nxt == current:
            break
        # progress bookkeeping: the driving chain must change cardinality
        # monotonically, otherwise the monotone-iteration premise is broken
        if from_sites:
            assert len(nxt) > prev_card
        else:
            assert len(nxt) < prev_card
        prev_card = len(nxt)
        current = nxt
        states.append(complete(nxt))
        steps += 1
        if steps > bound:
            raise BoundExceededError(
                f"driving chain not fixed after {steps} steps (bound {bound})"
            )
    trace = IterationTrace(states, steps, bound, direction, (drive,))
    return ZoneResult(complete(current), "zone", "unknown", trace)


def zone_from_double(space: MSpace, sites: RegionTuple, fixed: RegionTuple,
                     eps: float = 0.0) -> ZoneResult:
    """Turn a squared-dominance fixed pair into a zone diagram by keeping the
    first component and recompleting the second."""
    if sites.k_count != 2 or fixed.k_count != 2:
        raise OrderNotTwoError("conversion only works with exactly two site groups")
    ok, diffs = verify_double_zone(space, sites, fixed, eps)
    if not ok:
        raise NotDoubleZoneError(f"input is not a double zone diagram: diffs {diffs}")
    first = fixed[0]
    second = dominance_region(space, sites[1], first, eps)
    result = RegionTuple([first, second])
    ok, diffs = verify_zone(space, sites, result, eps)
    assert ok, f"completion failed to verify: {diffs}"
    return ZoneResult(result, "zone", "unknown")


def verify_zone(space: MSpace, sites: RegionTuple, regions: RegionTuple,
                eps: float = 0.0) -> tuple[bool, list[PointSet]]:
    """Is each region exactly the dominance region of its sites against the
    union of the others?  Returns per-component symmetric differences."""
    image = dominance_tuple(space, sites, regions, eps)
    diffs = [img ^ reg for img, reg in zip(image, regions)]
    return not any(diffs), diffs


def verify_double_zone(space: MSpace, sites: RegionTuple, regions: RegionTuple,
                       eps: float = 0.0) -> tuple[bool, list[PointSet]]:
    image = dominance_tuple(space, sites, dominance_tuple(space, sites, regions, eps), eps)
    diffs = [img ^ reg for img, reg in zip(image, regions)]
    return not any(diffs), diffs


# ---------------------------------------------------------------------------
# Brute-force enumeration over the site-anchored lattice
# ---------------------------------------------------------------------------


@dataclass
class LatticeScan:
    """Everything one exhaustive pass over the lattice can tell us."""

    dom_fixed: list[RegionTuple] = field(default_factory=list)
    dom2_fixed: list[RegionTuple] = field(default_factory=list)
    # union of all tuples below their own squared image, and intersection of
    # all tuples above it; comparing them decides the sandwich condition
    expanding_union: RegionTuple | None = None
    contracting_meet: RegionTuple | None = None


def _submasks(mask: int) -> list[int]:
    out = [0]
    bit = 1
    rest = mask
    while rest:
        if rest & 1:
            out += [m | bit for m in out]
        bit <<= 1
        rest >>= 1
    out.sort()
    return out


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("ZONED_THREADS", "1")))
    except ValueError:
        return 1


def scan_lattice(space: MSpace, sites: RegionTuple, cap: int = 1 << 24,
                 eps: float = 0.0, workers: int | None = None) -> LatticeScan:
    """Visit every tuple between the sites and the full space, classifying it
    against the dominance update and its square.

    Candidates are visited in increasing bitmask order per component, so the
    returned lists are canonically sorted.  The candidate space may be
    partitioned across worker threads; the merged result is identical to a
    sequential scan.
    """
    size = space.size
    k_count = sites.k_count
    full = (1 << size) - 1
    site_masks = [p.mask for p in sites]
    total = 1
    for m in site_masks:
        total <<= (full & ~m).bit_count()
        if total > cap:
            raise CapExceededError(f"{total}+ candidates exceed the cap {cap}")
    comp_masks = [
        [m | sub for sub in _submasks(full & ~m)] for m in site_masks
    ]

    def run_chunk(first_chunk: list[int]) -> LatticeScan:
        dom_cache: dict[tuple[int, int], int] = {}

        def dom_mask(k: int, rival_mask: int) -> int:
            key = (k, rival_mask)
            hit = dom_cache.get(key)
            if hit is None:
                hit = dominance_region(
                    space, sites[k], PointSet(rival_mask, size), eps
                ).mask
                dom_cache[key] = hit
            return hit

        def image(masks: tuple[int, ...]) -> tuple[int, ...]:
            out = []
            for k in range(k_count):
                rival = 0
                for j in range(k_count):
                    if j != k:
                        rival |= masks[j]
                out.append(dom_mask(k, rival))
            return tuple(out)

        scan = LatticeScan()
        expanding = list(site_masks)
        contracting = [full] * k_count
        for cand in itertools.product(first_chunk, *comp_masks[1:]):
            img = image(cand)
            img2 = image(img)
            if img == cand:
                scan.dom_fixed.append(RegionTuple(PointSet(m, size) for m in cand))
            if img2 == cand:
                scan.dom2_fixed.append(RegionTuple(PointSet(m, size) for m in cand))
            if all(c | i == i for c, i in zip(cand, img2)):
                expanding = [e | c for e, c in zip(expanding, cand)]
            if all(i | c == c for c, i in zip(cand, img2)):
                contracting = [m & c for m, c in zip(contracting, cand)]
        scan.expanding_union = RegionTuple(PointSet(m, size) for m in expanding)
        scan.contracting_meet = RegionTuple(PointSet(m, size) for m in contracting)
        return scan

    workers = default_workers() if workers is None else max(1, workers)
    first = comp_masks[0]
    if workers == 1 or len(first) < 2 * workers:
        return run_chunk(first)
    chunk_size = -(-len(first) // workers)
    chunks = [first[i:i + chunk_size] for i in range(0, len(first), chunk_size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run_chunk, chunks))
    merged = LatticeScan()
    merged.expanding_union = parts[0].expanding_union
    merged.contracting_meet = parts[0].contracting_meet
    for part in parts:
        merged.dom_fixed += part.dom_fixed
        merged.dom2_fixed += part.dom2_fixed
        merged.expanding_union = merged.expanding_union.union(part.expanding_union)
        merged.contracting_meet = merged.contracting_meet.intersection(part.contracting_meet)
    return merged


def brute_force_fixed_points(space: MSpace, sites: RegionTuple,
                             operator: str = "dom", cap: int = 1 << 24,
                             eps: float = 0.0,
                             workers: int | None = None) -> list[RegionTuple]:
    """All fixed tuples of the dominance update (or its square) between the
    sites and the full space, in canonical order.

    Fixed points outside that lattice cannot exist: a fixed tuple equals its
    own image, and every image contains the sites.
    """
    op = operator.lower()
    if op not in ("dom", "dom2"):
        raise ValueError(f"unknown operator {operator!r}")
    scan = scan_lattice(space, sites, cap, eps, workers)
    return scan.dom_fixed if op == "dom" else scan.dom2_fixed
