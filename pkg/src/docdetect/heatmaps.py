"""Ground-truth score maps rendered from character annotations.

Three channels: character regions, inter-character affinity (spaces between
adjacent characters of the same word), and special characters. Each glyph
or gap contributes one Gaussian blob, warped into its box and max-composited,
so values stay in [0, 1] without renormalization.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .geometry import Box, CharAnnotation, PageSample, word_groups

__all__ = [
    "HeatmapTarget",
    "gaussian_template",
    "render_region",
    "render_affinity",
    "render_special",
    "affinity_boxes",
    "make_target",
    "save_debug_maps",
]


@dataclass(frozen=True)
class HeatmapTarget:
    """Per-pixel training targets: region / affinity / special maps in [0,1]."""

    region: np.ndarray
    affinity: np.ndarray
    special: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        if not (self.region.shape == self.affinity.shape == self.special.shape):
            raise ValueError("the three maps must share one shape")

    @property
    def shape(self) -> tuple[int, int]:
        return self.region.shape

    def stacked(self) -> np.ndarray:
        """(3, H, W) array in channel order region, affinity, special."""
        return np.stack([self.region, self.affinity, self.special])


def gaussian_template(size: int) -> np.ndarray:
    """Isotropic 2-D Gaussian on a size x size grid, peak exactly 1 at center.

    sigma = size / 4; size must be odd and >= 3 so the peak lands on a pixel.
    """
    if size < 3 or size % 2 == 0:
        raise ValueError(f"template size must be odd and >= 3, got {size}")
    c = (size - 1) / 2.0
    sigma = size / 4.0
    ax = np.arange(size, dtype=np.float64) - c
    g = np.exp(-0.5 * (ax[:, None] ** 2 + ax[None, :] ** 2) / sigma**2)
    return g.astype(np.float32)


def _scaled(b: Box, scale: float) -> tuple[float, float, float, float]:
    return (b.x0 * scale, b.y0 * scale, b.x1 * scale, b.y1 * scale)


def _grid_shape(shape: tuple[int, int], scale: float) -> tuple[int, int]:
    return (int(round(shape[0] * scale)), int(round(shape[1] * scale)))


def render_region(
    chars: Iterable[CharAnnotation], shape: tuple[int, int], scale: float = 1.0
) -> np.ndarray:
    """Gaussian blob per non-special character box, max-composited."""
    out = np.zeros(_grid_shape(shape, scale), dtype=np.float32)
    boxes = [_scaled(c.box, scale) for c in chars if not c.is_special]
    if boxes:
        _kernels.splat_gaussians(out, np.asarray(boxes, dtype=np.float64))
    return out


def render_special(
    chars: Iterable[CharAnnotation], shape: tuple[int, int], scale: float = 1.0
) -> np.ndarray:
    """Same construction as render_region, over special characters only."""
    out = np.zeros(_grid_shape(shape, scale), dtype=np.float32)
    boxes = [_scaled(c.box, scale) for c in chars if c.is_special]
    if boxes:
        _kernels.splat_gaussians(out, np.asarray(boxes, dtype=np.float64))
    return out


def affinity_boxes(word_chars: Sequence[CharAnnotation]) -> list[Box]:
    """Affinity box per adjacent pair of non-special chars within one word.

    The box is centered at the midpoint of the two character centers, its
    width is the center-to-center distance and its height the mean of the two
    character heights. Special characters are skipped, so e.g. the letters
    around an embedded hyphen still count as adjacent.
    """
    regular = [c for c in word_chars if not c.is_special]
    out = []
    for a, b in zip(regular, regular[1:]):
        ax, ay = a.box.center
        bx, by = b.box.center
        dist = math.hypot(bx - ax, by - ay)
        w = max(dist, 2.0)
        h = max(0.5 * (a.box.height + b.box.height), 2.0)
        mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
        out.append(Box(mx - w / 2, my - h / 2, mx + w / 2, my + h / 2))
    return out


def render_affinity(
    words: Iterable[Sequence[CharAnnotation]], shape: tuple[int, int], scale: float = 1.0
) -> np.ndarray:
    """Gaussian blob per inter-character gap, max-composited."""
    out = np.zeros(_grid_shape(shape, scale), dtype=np.float32)
    boxes = []
    for chars in words:
        boxes.extend(_scaled(b, scale) for b in affinity_boxes(chars))
    if boxes:
        _kernels.splat_gaussians(out, np.asarray(boxes, dtype=np.float64))
    return out


def make_target(page: PageSample, scale: float = 1.0) -> HeatmapTarget:
    """Render the full three-channel target for a page."""
    shape = page.image.shape
    words = list(word_groups(page.chars).values())
    return HeatmapTarget(
        region=render_region(page.chars, shape, scale),
        affinity=render_affinity(words, shape, scale),
        special=render_special(page.chars, shape, scale),
        scale=scale,
    )


def save_debug_maps(target: HeatmapTarget, path_prefix: str) -> list[str]:
    """Write the three maps as 8-bit PNGs (value x 255) for inspection."""
    from PIL import Image

    paths = []
    for name, grid in (
        ("region", target.region),
        ("affinity", target.affinity),
        ("special", target.special),
    ):
        path = f"{path_prefix}_{name}.png"
        Image.fromarray((np.clip(grid, 0, 1) * 255).astype(np.uint8), mode="L").save(path)
        paths.append(path)
    return paths
