"""One-player coloring game whose stable configurations are zone diagrams.

Each site group owns a color.  The player repeatedly picks a non-site point,
computes which site groups currently dominate it against the union of the
other regions, and recolors it accordingly; a full pass over the non-site
points with no change means the configuration is stable.  Stability is
equivalent to being a zone diagram provided every point is at distance zero
from itself and strictly positive from everything else, so the game is
restricted to such spaces.

Recoloring one point can invalidate colors settled earlier, so termination
is not guaranteed; runs are capped and non-convergence is a reportable
outcome, not an error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .core import MSpace, PointSet, RegionTuple

NEUTRAL = -1


class OverlappingSitesError(ValueError):
    """Site components must be pairwise disjoint."""


class NotInQueueError(ValueError):
    """Only non-site points may be played."""


@dataclass(frozen=True)
class GamePolicy:
    """How the player fills in the free choices: the order points are
    visited within a pass, and which color wins when several dominate."""

    point_selection: str = "sweep"   # "sweep" | "random"
    tie_break: str = "lowest"        # "lowest" | "random"
    seed: int | None = None

    def __post_init__(self):
        if self.point_selection not in ("sweep", "random"):
            raise ValueError(f"unknown point selection {self.point_selection!r}")
        if self.tie_break not in ("lowest", "random"):
            raise ValueError(f"unknown tie break {self.tie_break!r}")


@dataclass
class GameState:
    coloring: list[int]            # per point: a color index or NEUTRAL
    regions: RegionTuple
    queue: PointSet                # the non-site points, fixed for the run
    move_count: int = 0


@dataclass(frozen=True)
class MoveRecord:
    move: int
    point: int
    old_color: int
    candidates: tuple[int, ...]
    new_color: int

    def format(self) -> str:
        cand = ",".join(map(str, self.candidates)) or "-"
        return (f"{self.move}\t{self.point}\t{_color_name(self.old_color)}"
                f"\t{{{cand}}}\t{_color_name(self.new_color)}")


def _color_name(c: int) -> str:
    return "neutral" if c == NEUTRAL else str(c)


def _check_game_space(space: MSpace) -> None:
    diag = space.matrix.diagonal()
    off = space.matrix[~np.eye(space.size, dtype=bool)]
    if (diag != 0).any() or (off.size and off.min() <= 0):
        raise ValueError(
            "the game needs zero self-distance and positive separation"
        )


def initial_state(space: MSpace, sites: RegionTuple) -> GameState:
    _check_game_space(space)
    coloring = [NEUTRAL] * space.size
    taken = PointSet.empty(space.size)
    for k, comp in enumerate(sites):
        if not comp:
            raise ValueError("every site component must be nonempty")
        if taken & comp:
            raise OverlappingSitesError("site components overlap")
        taken = taken | comp
        for x in comp:
            coloring[x] = k
    return GameState(coloring, sites, taken.complement())


def _candidate_colors(space: MSpace, sites: RegionTuple, regions: RegionTuple,
                      x: int, eps: float) -> tuple[int, ...]:
    out = []
    for k in range(sites.k_count):
        d_site = space.point_to_set_raw(x, sites[k])
        d_rest = space.point_to_set_raw(x, regions.rest_union(k))
        if eps:
            d_rest = d_rest + eps
        if d_site <= d_rest:
            out.append(k)
    return tuple(out)


def _coherent(sites: RegionTuple, state: GameState) -> bool:
    for k, (site, region) in enumerate(zip(sites, state.regions)):
        if not site.issubset(region):
            return False
        for x in region - site:
            if state.coloring[x] != k:
                return False
    for x in state.queue:
        c = state.coloring[x]
        if c != NEUTRAL and x not in state.regions[c]:
            return False
    return True


def _apply(space: MSpace, sites: RegionTuple, state: GameState, x: int,
           policy: GamePolicy, rng: random.Random | None,
           eps: float) -> tuple[GameState, MoveRecord]:
    if x not in state.queue:
        raise NotInQueueError(f"point {x} is a site point or out of range")
    candidates = _candidate_colors(space, sites, state.regions, x, eps)
    old = state.coloring[x]
    if not candidates:
        new = NEUTRAL
    elif old in candidates:
        new = old
    elif policy.tie_break == "lowest" or len(candidates) == 1:
        new = candidates[0]
    else:
        new = (rng or random.Random(policy.seed)).choice(candidates)
    coloring = state.coloring
    regions = state.regions
    if new != old:
        coloring = list(coloring)
        coloring[x] = new
        comps = [
            comp.with_point(x) if k == new else comp.without_point(x)
            for k, comp in enumerate(regions)
        ]
        regions = RegionTuple(comps)
    nxt = GameState(coloring, regions, state.queue, state.move_count + 1)
    assert _coherent(sites, nxt)
    record = MoveRecord(nxt.move_count, x, old, candidates, new)
    return nxt, record


def game_step(space: MSpace, sites: RegionTuple, state: GameState, x: int,
              policy: GamePolicy = GamePolicy(), rng: random.Random | None = None,
              eps: float = 0.0) -> GameState:
    """Play one point: recolor it to a dominating color (keeping the current
    one when it still dominates) or to neutral when nothing dominates."""
    nxt, _ = _apply(space, sites, state, x, policy, rng, eps)
    return nxt


def game_run(space: MSpace, sites: RegionTuple, policy: GamePolicy = GamePolicy(),
             max_moves: int | None = None, eps: float = 0.0,
             transcript: list[MoveRecord] | None = None) -> tuple[GameState, bool]:
    """Play passes over the non-site points until one changes nothing.

    Every point is visited exactly once per pass (in index order for sweep,
    in a freshly drawn random order otherwise).  Returns the final state and
    whether stability was reached before the move budget ran out.
    """
    state = initial_state(space, sites)
    if max_moves is None:
        max_moves = 100 * space.size
    rng = random.Random(policy.seed)
    points = sorted(state.queue)
    if not points:
        return state, True
    while True:
        order = points if policy.point_selection == "sweep" else rng.sample(points, len(points))
        changed = False
        for x in order:
            if state.move_count >= max_moves:
                return state, False
            state, record = _apply(space, sites, state, x, policy, rng, eps)
            if transcript is not None:
                transcript.append(record)
            if record.new_color != record.old_color:
                changed = True
        if not changed:
            return state, True


def is_stable(space: MSpace, sites: RegionTuple, state: GameState,
              eps: float = 0.0) -> bool:
    """Would a pass over the non-site points change anything?"""
    _check_game_space(space)
    for x in state.queue:
        candidates = _candidate_colors(space, sites, state.regions, x, eps)
        c = state.coloring[x]
        if not candidates:
            if c != NEUTRAL:
                return False
        elif c not in candidates:
            return False
    return True
