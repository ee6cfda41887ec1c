"""Uniqueness certification for zone diagrams.

Six conditions, each sufficient for a unique zone diagram (and, with two
site groups, also necessary):

  a. the minimal and maximal double zone diagrams coincide;
  b. the squared update has a unique fixed tuple;
  c. every fixed tuple of the squared update is fixed under the update itself;
  d. the two fixed-point sets coincide;
  e. the minimal and maximal double zone diagrams are themselves zone diagrams;
  f. every tuple below its own squared image sits below every tuple above its
     own squared image (the sandwich condition on the site-anchored lattice).

Conditions (a) and (e) only need the two bracketing iterations; the rest
need exhaustive enumeration and are gated behind the brute-force effort.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import MSpace, RegionTuple, dominance_tuple
from .engine import iterate_double_zone, scan_lattice
from .spaces import Line1D, fixture

BRACKETING = "bracketing-only"
BRUTE_FORCE = "with-brute-force"


@dataclass
class UniquenessReport:
    minimal: RegionTuple
    maximal: RegionTuple
    cond_a: bool
    cond_b: bool | None
    cond_c: bool | None
    cond_d: bool | None
    cond_e: bool
    cond_f: bool | None
    zone_count: int | None

    def conditions(self) -> dict[str, bool | None]:
        return {
            "a": self.cond_a,
            "b": self.cond_b,
            "c": self.cond_c,
            "d": self.cond_d,
            "e": self.cond_e,
            "f": self.cond_f,
        }

    def all_known_agree(self) -> bool:
        known = {v for v in self.conditions().values() if v is not None}
        return len(known) == 1


def uniqueness_check(space: MSpace, sites: RegionTuple,
                     effort: str = BRACKETING, cap: int = 1 << 24,
                     eps: float = 0.0, workers: int | None = None) -> UniquenessReport:
    """Evaluate the uniqueness conditions; enumeration-backed ones stay None
    under bracketing-only effort."""
    if effort not in (BRACKETING, BRUTE_FORCE):
        raise ValueError(f"unknown effort {effort!r}")
    minimal = iterate_double_zone(space, sites, "ascending", eps).regions
    maximal = iterate_double_zone(space, sites, "descending", eps).regions
    cond_a = minimal == maximal
    cond_e = (
        dominance_tuple(space, sites, minimal, eps) == minimal
        and dominance_tuple(space, sites, maximal, eps) == maximal
    )
    cond_b = cond_c = cond_d = cond_f = None
    zone_count = None
    if effort == BRUTE_FORCE:
        scan = scan_lattice(space, sites, cap, eps, workers)
        dom_fixed = set(scan.dom_fixed)
        cond_b = len(scan.dom2_fixed) == 1
        cond_c = all(t in dom_fixed for t in scan.dom2_fixed)
        cond_d = dom_fixed == set(scan.dom2_fixed)
        cond_f = scan.expanding_union.leq(scan.contracting_meet)
        zone_count = len(scan.dom_fixed)
    return UniquenessReport(
        minimal, maximal, cond_a, cond_b, cond_c, cond_d, cond_e, cond_f, zone_count
    )


def interval_recurrence(t_max: int) -> list[tuple[Fraction, Fraction]]:
    """Exact boundary recurrence for the interval [-3, 3] with one site at
    each end: each update places a region boundary at the midpoint between
    the rival region's boundary and the region's own site.  Starts at
    (-3, 3); the boundaries converge to -1 and 1, alternating sides."""
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    a, b = Fraction(-3), Fraction(3)
    out = [(a, b)]
    for _ in range(t_max):
        a, b = (b - 3) / 2, (a + 3) / 2
        out.append((a, b))
    return out


def _hausdorff_indices(a: np.ndarray, b: np.ndarray) -> int:
    gaps = np.abs(a[:, None] - b[None, :])
    return int(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()))


def recurrence_vs_grid(step, t_max: int) -> list[int]:
    """Cross-check the exact recurrence against grid iteration.

    Applies the dominance update t times on the discretized interval and
    reports, per t, the worst index-space Hausdorff distance between the
    computed components and the grid restriction of the exact intervals.
    """
    fx = fixture("interval", step=step)
    space, sites = fx.space, fx.sites
    line: Line1D = space.geometry
    n = space.size
    exact = interval_recurrence(t_max)
    deviations = []
    current = sites
    for t in range(t_max + 1):
        a, b = exact[t]
        left_end = line.floor_index(a)
        right_start = line.ceil_index(b)
        expected_left = np.arange(0, left_end + 1)
        expected_right = np.arange(right_start, n)
        dev = max(
            _hausdorff_indices(current[0].indices(), expected_left),
            _hausdorff_indices(current[1].indices(), expected_right),
        )
        deviations.append(dev)
        if t < t_max:
            current = dominance_tuple(space, sites, current)
    return deviations
