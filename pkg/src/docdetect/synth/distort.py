"""Spatial distortion of a page: homography plus optional elastic field.

The image is resampled with the inverse map; annotation boxes are replaced
by the axis-aligned bounds of their forward-transformed corners and clipped
to the page. Characters pushed (almost) fully off the page are dropped.
"""
from __future__ import annotations

import math

import cv2
import numpy as np

from ..geometry import Box, CharAnnotation, PageSample, transform_points
from .spec import DistortionSpec

__all__ = ["apply_distortion", "sample_homography", "sample_elastic", "warp_page"]

_MIN_BOX_SIDE = 0.5  # px; clipped boxes thinner than this are dropped


def sample_homography(d: DistortionSpec, size: tuple[int, int], rng: np.random.Generator) -> np.ndarray:
    """Rotation about the page center composed with perspective corner jitter."""
    w, h = size
    cx, cy = w / 2.0, h / 2.0
    hm = np.eye(3)

    if d.max_rotation_deg > 0:
        a = math.radians(rng.uniform(-d.max_rotation_deg, d.max_rotation_deg))
        c, s = math.cos(a), math.sin(a)
        hm = np.array(
            [[c, -s, cx - c * cx + s * cy], [s, c, cy - s * cx - c * cy], [0, 0, 1]]
        )

    if d.max_perspective_jitter > 0:
        src = np.array([[0, 0], [w, 0], [w, h], [0, h]], dtype=np.float32)
        jit = rng.uniform(
            -d.max_perspective_jitter, d.max_perspective_jitter, size=(4, 2)
        ).astype(np.float32) * np.array([w, h], dtype=np.float32)
        persp = cv2.getPerspectiveTransform(src, src + jit).astype(np.float64)
        hm = persp @ hm

    return hm


def sample_elastic(
    strength: float, size: tuple[int, int], rng: np.random.Generator
) -> np.ndarray | None:
    """Smooth random displacement field, shape (2, H, W) with (dx, dy) in px."""
    if strength <= 0:
        return None
    w, h = size
    amp = strength * 0.02 * min(w, h)
    sigma = max(min(w, h) / 16.0, 2.0)
    field = rng.standard_normal((2, h, w)).astype(np.float32)
    for k in range(2):
        field[k] = cv2.GaussianBlur(field[k], (0, 0), sigma)
        peak = np.abs(field[k]).max()
        if peak > 0:
            field[k] *= amp / peak
    return field


def _sample_field(field: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Bilinear displacement lookup at float points (n, 2), clamped to edges."""
    _, h, w = field.shape
    x = np.clip(pts[:, 0], 0, w - 1.001)
    y = np.clip(pts[:, 1], 0, h - 1.001)
    x0 = np.floor(x).astype(int)
    y0 = np.floor(y).astype(int)
    fx = x - x0
    fy = y - y0
    out = np.empty_like(pts)
    for k in range(2):
        f = field[k]
        out[:, k] = (
            f[y0, x0] * (1 - fx) * (1 - fy)
            + f[y0, x0 + 1] * fx * (1 - fy)
            + f[y0 + 1, x0] * (1 - fx) * fy
            + f[y0 + 1, x0 + 1] * fx * fy
        )
    return out


def warp_page(page: PageSample, hm: np.ndarray, field: np.ndarray | None = None) -> PageSample:
    """Warp image and annotations by q = H(p) + field(H(p)); white border fill."""
    h, w = page.image.shape

    if field is None:
        warped = cv2.warpPerspective(
            page.image, hm, (w, h), flags=cv2.INTER_LINEAR,
            borderMode=cv2.BORDER_CONSTANT, borderValue=1.0,
        )
    else:
        # Inverse sampling: src = H^-1(q - field(q)), first-order inverse of
        # the forward composition (fields are small and smooth).
        ys, xs = np.mgrid[0:h, 0:w].astype(np.float32)
        qx = xs - field[0]
        qy = ys - field[1]
        hinv = np.linalg.inv(hm)
        denom = hinv[2, 0] * qx + hinv[2, 1] * qy + hinv[2, 2]
        map_x = (hinv[0, 0] * qx + hinv[0, 1] * qy + hinv[0, 2]) / denom
        map_y = (hinv[1, 0] * qx + hinv[1, 1] * qy + hinv[1, 2]) / denom
        warped = cv2.remap(
            page.image, map_x.astype(np.float32), map_y.astype(np.float32),
            interpolation=cv2.INTER_LINEAR, borderMode=cv2.BORDER_CONSTANT, borderValue=1.0,
        )

    new_chars: list[CharAnnotation] = []
    for c in page.chars:
        corners = transform_points(c.box.corners(), hm)
        if field is not None:
            pts = np.asarray(corners)
            corners = pts + _sample_field(field, pts)
        else:
            corners = np.asarray(corners)
        x0 = max(float(np.min(corners[:, 0])), 0.0)
        y0 = max(float(np.min(corners[:, 1])), 0.0)
        x1 = min(float(np.max(corners[:, 0])), float(w))
        y1 = min(float(np.max(corners[:, 1])), float(h))
        if x1 - x0 < _MIN_BOX_SIDE or y1 - y0 < _MIN_BOX_SIDE:
            continue
        new_chars.append(
            CharAnnotation(Box(x0, y0, x1, y1), c.codepoint, c.word_id, c.is_special)
        )
    return PageSample(image=warped, chars=tuple(new_chars))


def apply_distortion(page: PageSample, d: DistortionSpec, seed: int) -> PageSample:
    """Sample and apply one distortion; identity spec returns the page as-is."""
    if d.is_identity:
        return page
    rng = np.random.default_rng(seed)
    size = (page.width, page.height)
    hm = sample_homography(d, size, rng)
    field = sample_elastic(d.elastic_strength, size, rng)
    return warp_page(page, hm, field)
