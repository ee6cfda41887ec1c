"""Binary PPM rendering of 2-d grid results.

Fixed palette, no metadata, so identical inputs produce byte-identical
images.  Pixel (row, col) shows the cell at (xmin + col*step,
ymax - row*step): columns scan x left to right, rows scan y top down.
"""

from __future__ import annotations

import numpy as np

from .spaces import Grid2D

PALETTE = (
    (66, 135, 245),   # blue
    (240, 101, 67),   # red-orange
    (67, 160, 71),    # green
    (171, 71, 188),   # purple
    (255, 179, 0),    # amber
    (0, 172, 193),    # teal
    (141, 110, 99),   # brown
    (96, 125, 139),   # slate
)
SITE_SHADE = 0.55
NEUTRAL_COLOR = (255, 255, 255)


class NonGridSpaceError(ValueError):
    """Rendering needs a 2-d grid geometry."""


def result_image(result: dict) -> np.ndarray:
    """RGB image array for a result document carrying grid metadata."""
    if "grid" not in result:
        raise NonGridSpaceError("result carries no grid geometry")
    grid = Grid2D.from_meta(result["grid"])
    if grid.size != result["size"]:
        raise ValueError("grid metadata does not match the point count")
    image = np.full((grid.ny, grid.nx, 3), 255, dtype=np.uint8)
    claimed = np.zeros((grid.ny, grid.nx), dtype=bool)

    def pixel(idx: int) -> tuple[int, int]:
        ix, iy = divmod(idx, grid.ny)
        return grid.ny - 1 - iy, ix

    # lowest component index wins contested cells, for reproducible output
    for k, comp in enumerate(result["components"]):
        color = PALETTE[k % len(PALETTE)]
        for idx in comp:
            row, col = pixel(idx)
            if not claimed[row, col]:
                image[row, col] = color
                claimed[row, col] = True
    for k, comp in enumerate(result.get("sites", [])):
        color = PALETTE[k % len(PALETTE)]
        dark = tuple(int(c * SITE_SHADE) for c in color)
        for idx in comp:
            row, col = pixel(idx)
            image[row, col] = dark
    return image


def write_ppm(image: np.ndarray, path) -> None:
    height, width = image.shape[:2]
    with open(path, "wb") as fh:
        fh.write(f"P6\n{width} {height}\n255\n".encode("ascii"))
        fh.write(image.astype(np.uint8).tobytes())


def render_result(result: dict, path) -> None:
    write_ppm(result_image(result), path)
