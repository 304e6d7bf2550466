"""Geometry and annotation types shared by every stage of the pipeline.

Coordinates are floating-point pixels, origin at the top-left corner,
x growing right and y growing down. Rasterization rounds only at drawing
time; everything upstream stays continuous.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Box",
    "Quad",
    "CharAnnotation",
    "PageSample",
    "iou",
    "quad_to_box",
    "transform_points",
    "union_boxes",
    "word_groups",
    "word_boxes",
]


@dataclass(frozen=True)
class Box:
    """Axis-aligned rectangle with x0 < x1 and y0 < y1."""

    x0: float
    y0: float
    x1: float
    y1: float

    def __post_init__(self):
        for v in (self.x0, self.y0, self.x1, self.y1):
            if not math.isfinite(v):
                raise ValueError(f"box coordinates must be finite, got {self}")
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(f"box must have positive extent, got {self}")

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def center(self) -> tuple[float, float]:
        return (0.5 * (self.x0 + self.x1), 0.5 * (self.y0 + self.y1))

    def corners(self) -> list[tuple[float, float]]:
        """Corner points in clockwise order (screen orientation, y down)."""
        return [(self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)]

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x0, self.y0, self.x1, self.y1)


def _signed_area(points: Sequence[tuple[float, float]]) -> float:
    total = 0.0
    n = len(points)
    for i in range(n):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return 0.5 * total


def _segments_cross(p, q, r, s) -> bool:
    """True when open segments pq and rs properly intersect."""

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    return (
        orient(p, q, r) != orient(p, q, s)
        and orient(r, s, p) != orient(r, s, q)
        and orient(p, q, r) != 0
        and orient(p, q, s) != 0
        and orient(r, s, p) != 0
        and orient(r, s, q) != 0
    )


@dataclass(frozen=True)
class Quad:
    """Four corner points in clockwise order (screen orientation, y down)."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.points) != 4:
            raise ValueError(f"quad needs exactly 4 points, got {len(self.points)}")
        pts = tuple((float(x), float(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        for x, y in pts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError("quad coordinates must be finite")
        # In y-down coordinates a clockwise-on-screen polygon has positive
        # shoelace sum.
        if _signed_area(pts) <= 0:
            raise ValueError("quad corners must be in clockwise order (positive area)")
        if _segments_cross(pts[0], pts[1], pts[2], pts[3]) or _segments_cross(
            pts[1], pts[2], pts[3], pts[0]
        ):
            raise ValueError("quad must not self-intersect")


@dataclass(frozen=True)
class CharAnnotation:
    """One rendered character: its tight box, codepoint, word and special flag."""

    box: Box
    codepoint: str
    word_id: int
    is_special: bool

    def __post_init__(self):
        if len(self.codepoint) != 1:
            raise ValueError(f"codepoint must be a single character, got {self.codepoint!r}")
        if self.word_id < 0:
            raise ValueError(f"word_id must be >= 0, got {self.word_id}")


@dataclass(frozen=True)
class PageSample:
    """A page image in [0,1] grayscale plus its character annotations.

    Immutable after construction: the pixel buffer is frozen so samples can
    be shared freely between workers.
    """

    image: np.ndarray
    chars: tuple[CharAnnotation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        img = np.asarray(self.image, dtype=np.float32)
        if img.ndim != 2:
            raise ValueError(f"page image must be 2-D grayscale, got shape {img.shape}")
        img = np.ascontiguousarray(img)
        img.flags.writeable = False
        object.__setattr__(self, "image", img)
        object.__setattr__(self, "chars", tuple(self.chars))
        h, w = img.shape
        for c in self.chars:
            b = c.box
            if b.x0 < -1e-6 or b.y0 < -1e-6 or b.x1 > w + 1e-6 or b.y1 > h + 1e-6:
                raise ValueError(f"char box {b} outside page bounds {w}x{h}")

    @property
    def height(self) -> int:
        return self.image.shape[0]

    @property
    def width(self) -> int:
        return self.image.shape[1]

    @property
    def words(self) -> dict[int, tuple[CharAnnotation, ...]]:
        return word_groups(self.chars)


def word_groups(chars: Iterable[CharAnnotation]) -> dict[int, tuple[CharAnnotation, ...]]:
    """Group characters by word_id, preserving reading order within each word."""
    groups: dict[int, list[CharAnnotation]] = {}
    for c in chars:
        groups.setdefault(c.word_id, []).append(c)
    return {wid: tuple(cs) for wid, cs in groups.items()}


def union_boxes(boxes: Sequence[Box]) -> Box:
    """Tight axis-aligned bounds of several boxes."""
    if not boxes:
        raise ValueError("union_boxes needs at least one box")
    return Box(
        min(b.x0 for b in boxes),
        min(b.y0 for b in boxes),
        max(b.x1 for b in boxes),
        max(b.y1 for b in boxes),
    )


def word_boxes(page: PageSample, regular_only: bool = True) -> list[Box]:
    """Word-level boxes (union of member char boxes) in word_id order.

    With regular_only, words made purely of special characters (separator
    rows, stray bullets) are excluded: they are layout, not text, and must
    not count as ground truth for detection.
    """
    out = []
    for wid in sorted(word_groups(page.chars)):
        chars = word_groups(page.chars)[wid]
        if regular_only and all(c.is_special for c in chars):
            continue
        out.append(union_boxes([c.box for c in chars]))
    return out


def iou(a: Box, b: Box) -> float:
    """Intersection-over-union of two boxes, in [0, 1]."""
    ix0 = max(a.x0, b.x0)
    iy0 = max(a.y0, b.y0)
    ix1 = min(a.x1, b.x1)
    iy1 = min(a.y1, b.y1)
    iw = ix1 - ix0
    ih = iy1 - iy0
    if iw <= 0 or ih <= 0:
        return 0.0
    inter = iw * ih
    union = a.area + b.area - inter
    return inter / union


def quad_to_box(q: Quad) -> Box:
    """Tight axis-aligned bounding box of a quad's four corners."""
    xs = [p[0] for p in q.points]
    ys = [p[1] for p in q.points]
    return Box(min(xs), min(ys), max(xs), max(ys))


def transform_points(
    pts: Sequence[tuple[float, float]], h: np.ndarray
) -> list[tuple[float, float]]:
    """Apply a 3x3 homography to 2-D points.

    Raises ValueError for a singular matrix or a zero bottom-right entry.
    """
    h = np.asarray(h, dtype=np.float64)
    if h.shape != (3, 3):
        raise ValueError(f"homography must be 3x3, got {h.shape}")
    if abs(h[2, 2]) < 1e-12:
        raise ValueError("homography bottom-right entry must be nonzero")
    if abs(np.linalg.det(h)) < 1e-12:
        raise ValueError("homography is singular")
    if not pts:
        return []
    arr = np.asarray(pts, dtype=np.float64)
    ones = np.ones((arr.shape[0], 1))
    hom = np.hstack([arr, ones]) @ h.T
    w = hom[:, 2]
    if np.any(np.abs(w) < 1e-12):
        raise ValueError("point maps to infinity under this homography")
    out = hom[:, :2] / w[:, None]
    return [(float(x), float(y)) for x, y in out]
