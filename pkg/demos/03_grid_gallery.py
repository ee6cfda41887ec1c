#!/usr/bin/env python3
"""Two planar galleries: concentric rings under the Euclidean norm and the
piecewise-linear frontier under the max norm.  Writes PPM images next to
this script.

Both spaces are integer grids; Euclidean comparisons run on squared
integers, so every tie is decided exactly.
"""

from pathlib import Path

from zoned import fixture, iterate_double_zone, verify_zone, zone_order2
from zoned.render import render_result
from zoned.serialize import result_to_dict

out_dir = Path(__file__).resolve().parent / "out"
out_dir.mkdir(exist_ok=True)

# --- rings ------------------------------------------------------------------
fx = fixture("rings")
print(f"rings: {fx.space.size} cells on [-17, 17]^2,"
      f" site circles at radii 1,7,13,19 and 4,10,16,22")
up = iterate_double_zone(fx.space, fx.sites, "ascending")
down = iterate_double_zone(fx.space, fx.sites, "descending")
print("  minimal == maximal:", up.regions == down.regions)
print("  annuli match the closed-form bands (one-cell tolerance):",
      fx.expected.check(up.regions))
ok, _ = verify_zone(fx.space, fx.sites, up.regions)
print("  the double zone diagram here is even a zone diagram:", ok)
render_result(result_to_dict(fx.space, fx.sites, up), out_dir / "rings.ppm")
print("  wrote", out_dir / "rings.ppm")

# --- max norm ---------------------------------------------------------------
fx = fixture("maxnorm")
print(f"\nmax norm: {fx.space.size} cells on [-20, 20]^2, sites (0,3) and (0,-3)")
formula = fx.expected.formula_tuple()
ok, _ = verify_zone(fx.space, fx.sites, formula)
print("  the closed-form half-plane pair verifies as a zone diagram:", ok)

computed = zone_order2(fx.space, fx.sites[0], fx.sites[1], "R")
print("  computed boundary deviates from the ridge by",
      fx.expected.boundary_deviation(computed.regions), "cells")
render_result(result_to_dict(fx.space, fx.sites, computed), out_dir / "maxnorm.ppm")
print("  wrote", out_dir / "maxnorm.ppm")
