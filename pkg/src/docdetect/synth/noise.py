"""Scan-noise degradations: texture, dots, short lines, blur, salt & pepper,
JPEG round-trip artifacts. Annotations are never touched; only pixels change.
"""
from __future__ import annotations

import cv2
import numpy as np

from ..geometry import PageSample
from .spec import NoiseSpec

__all__ = ["apply_noise"]


def apply_noise(page: PageSample, n: NoiseSpec, seed: int) -> PageSample:
    """Degrade the page image per spec; identity spec returns the page as-is."""
    if n.is_identity:
        return page
    rng = np.random.default_rng(seed)
    img = np.array(page.image, dtype=np.float32)  # writable copy
    h, w = img.shape

    if n.background_texture_strength > 0:
        field = rng.standard_normal((h, w)).astype(np.float32)
        field = cv2.GaussianBlur(field, (0, 0), max(min(h, w) / 12.0, 2.0))
        lo, hi = field.min(), field.max()
        if hi > lo:
            field = (field - lo) / (hi - lo)
        img -= n.background_texture_strength * 0.3 * field

    if n.dot_density > 0:
        count = int(rng.poisson(n.dot_density * h * w / 1e6))
        for _ in range(count):
            cx = int(rng.integers(0, w))
            cy = int(rng.integers(0, h))
            r = float(rng.uniform(0.5, 1.5))
            shade = float(rng.uniform(0.0, 0.35))
            cv2.circle(img, (cx, cy), int(round(r)), shade, thickness=-1)

    hi_lines = n.short_line_count_range[1]
    if hi_lines > 0:
        count = int(rng.integers(n.short_line_count_range[0], hi_lines + 1))
        for _ in range(count):
            x0 = float(rng.uniform(0, w))
            y0 = float(rng.uniform(0, h))
            angle = float(rng.uniform(0, 2 * np.pi))
            length = float(rng.uniform(3, 15))
            x1 = x0 + length * np.cos(angle)
            y1 = y0 + length * np.sin(angle)
            shade = float(rng.uniform(0.0, 0.4))
            cv2.line(img, (int(x0), int(y0)), (int(x1), int(y1)), shade, thickness=1)

    if n.blur_sigma_range[1] > 0:
        sigma = float(rng.uniform(*n.blur_sigma_range))
        if sigma > 1e-3:
            img = cv2.GaussianBlur(img, (0, 0), sigma)

    if n.salt_pepper_prob > 0:
        mask = rng.random((h, w)) < n.salt_pepper_prob
        values = (rng.random(int(mask.sum())) < 0.5).astype(np.float32)
        img[mask] = values

    if n.jpeg_artifact_quality_range[1] > 0:
        quality = int(rng.integers(n.jpeg_artifact_quality_range[0],
                                   n.jpeg_artifact_quality_range[1] + 1))
        quality = max(quality, 1)
        u8 = (np.clip(img, 0, 1) * 255).round().astype(np.uint8)
        ok, enc = cv2.imencode(".jpg", u8, [cv2.IMWRITE_JPEG_QUALITY, quality])
        if ok:
            img = cv2.imdecode(enc, cv2.IMREAD_GRAYSCALE).astype(np.float32) / 255.0

    img = np.clip(img, 0.0, 1.0)
    return PageSample(image=img, chars=page.chars)
