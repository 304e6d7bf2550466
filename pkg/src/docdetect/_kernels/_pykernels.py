"""Numpy implementations of the per-pixel hot kernels.

These are the fallback used when the compiled extension is unavailable.
Both backends expose the same four entry points and must produce identical
results (see tests and benchmarks/bench_kernels.py).
"""
from __future__ import annotations

import numpy as np

NAME = "python"


def _find(parent: np.ndarray, i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return int(i)


def label_components(mask: np.ndarray) -> tuple[np.ndarray, int]:
    """8-connectivity labeling of a binary grid.

    Returns (labels, count) with labels in 1..count, 0 for background.
    Components are numbered by the row-major position of their first pixel.
    """
    m = np.asarray(mask)
    if m.ndim != 2:
        raise ValueError(f"mask must be 2-D, got shape {m.shape}")
    m = m.astype(bool)
    h, w = m.shape
    labels = np.zeros((h, w), dtype=np.int32)
    if not m.any():
        return labels, 0

    # Row runs: starts/ends (exclusive) of each horizontal run of True.
    padded = np.zeros((h, w + 2), dtype=np.int8)
    padded[:, 1:-1] = m
    d = np.diff(padded, axis=1)
    run_row, run_s = np.nonzero(d == 1)
    _, run_e = np.nonzero(d == -1)  # same ordering as starts, exclusive end
    nruns = len(run_row)
    parent = np.arange(nruns, dtype=np.int64)

    row_lo = np.searchsorted(run_row, np.arange(h), side="left")
    row_hi = np.searchsorted(run_row, np.arange(h), side="right")

    for r in range(1, h):
        i, i_end = int(row_lo[r - 1]), int(row_hi[r - 1])
        j, j_end = int(row_lo[r]), int(row_hi[r])
        while i < i_end and j < j_end:
            # Runs touch under 8-connectivity iff their column spans overlap
            # after extending one of them by a single diagonal pixel.
            if run_s[i] <= run_e[j] and run_s[j] <= run_e[i]:
                ri, rj = _find(parent, i), _find(parent, j)
                if ri != rj:
                    if ri < rj:
                        parent[rj] = ri
                    else:
                        parent[ri] = rj
            if run_e[i] <= run_e[j]:
                i += 1
            else:
                j += 1

    compact = {}
    run_label = np.zeros(nruns, dtype=np.int32)
    for k in range(nruns):
        root = _find(parent, k)
        if root not in compact:
            compact[root] = len(compact) + 1
        run_label[k] = compact[root]
    for k in range(nruns):
        labels[run_row[k], run_s[k] : run_e[k]] = run_label[k]
    return labels, len(compact)


def component_stats(labels: np.ndarray, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Bounding boxes (x0, y0, x1, y1; exclusive max) and pixel areas per label."""
    boxes = np.zeros((count, 4), dtype=np.int64)
    areas = np.zeros(count, dtype=np.int64)
    if count == 0:
        return boxes, areas
    ys, xs = np.nonzero(labels)
    ids = labels[ys, xs].astype(np.int64) - 1
    x0 = np.full(count, np.iinfo(np.int64).max)
    y0 = np.full(count, np.iinfo(np.int64).max)
    x1 = np.full(count, -1, dtype=np.int64)
    y1 = np.full(count, -1, dtype=np.int64)
    np.minimum.at(x0, ids, xs)
    np.minimum.at(y0, ids, ys)
    np.maximum.at(x1, ids, xs)
    np.maximum.at(y1, ids, ys)
    areas[:] = np.bincount(ids, minlength=count)
    boxes[:, 0] = x0
    boxes[:, 1] = y0
    boxes[:, 2] = x1 + 1
    boxes[:, 3] = y1 + 1
    return boxes, areas


def component_max(labels: np.ndarray, count: int, values: np.ndarray) -> np.ndarray:
    """Maximum of `values` over each labeled component."""
    out = np.zeros(count, dtype=np.float64)
    if count == 0:
        return out
    ys, xs = np.nonzero(labels)
    ids = labels[ys, xs].astype(np.int64) - 1
    acc = np.full(count, -np.inf)
    np.maximum.at(acc, ids, np.asarray(values, dtype=np.float64)[ys, xs])
    out[:] = np.where(np.isfinite(acc), acc, 0.0)
    return out


def splat_gaussians(out: np.ndarray, boxes: np.ndarray) -> None:
    """Max-composite one anisotropic Gaussian blob per box into `out`.

    Each blob has sigma = side/4 per axis, support limited to its box, and
    is normalized so its brightest covered pixel is exactly 1. Pixel values
    are taken at pixel centers (col + 0.5, row + 0.5).
    """
    if out.ndim != 2:
        raise ValueError("output grid must be 2-D")
    h, w = out.shape
    boxes = np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
    for x0, y0, x1, y1 in boxes:
        ix0 = max(int(np.floor(x0)), 0)
        iy0 = max(int(np.floor(y0)), 0)
        ix1 = min(int(np.ceil(x1)), w)
        iy1 = min(int(np.ceil(y1)), h)
        if ix0 >= ix1 or iy0 >= iy1:
            continue
        cx = 0.5 * (x0 + x1)
        cy = 0.5 * (y0 + y1)
        sx = max(x1 - x0, 1e-3) / 4.0
        sy = max(y1 - y0, 1e-3) / 4.0
        dx = (np.arange(ix0, ix1, dtype=np.float64) + 0.5 - cx) / sx
        dy = (np.arange(iy0, iy1, dtype=np.float64) + 0.5 - cy) / sy
        g = np.exp(-0.5 * (dy[:, None] ** 2 + dx[None, :] ** 2))
        peak = g.max()
        if peak > 0:
            g /= peak
        patch = out[iy0:iy1, ix0:ix1]
        np.maximum(patch, g.astype(out.dtype), out=patch)


def levenshtein(a: str, b: str) -> int:
    """Edit distance (insert/delete/substitute, unit costs)."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a):
        cur = [i + 1]
        for j, cb in enumerate(b):
            cur.append(min(prev[j + 1] + 1, cur[j] + 1, prev[j] + (ca != cb)))
        prev = cur
    return prev[-1]
