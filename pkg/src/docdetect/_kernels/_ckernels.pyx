# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled implementations of the per-pixel hot kernels.

Semantics are identical to _pykernels (the numpy fallback); the parity is
enforced by tests and measured by benchmarks/bench_kernels.py.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport ceil, exp, floor

cnp.import_array()

NAME = "cython"


cdef inline Py_ssize_t _find(cnp.int32_t[::1] parent, Py_ssize_t i) noexcept nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def label_components(mask):
    """8-connectivity labeling of a binary grid.

    Returns (labels, count) with labels in 1..count, 0 for background.
    Components are numbered by the row-major position of their first pixel.
    """
    m_arr = np.asarray(mask)
    if m_arr.ndim != 2:
        raise ValueError(f"mask must be 2-D, got shape {m_arr.shape}")
    cdef cnp.uint8_t[:, ::1] m = np.ascontiguousarray(m_arr != 0, dtype=np.uint8)
    cdef Py_ssize_t h = m.shape[0]
    cdef Py_ssize_t w = m.shape[1]
    labels_arr = np.zeros((h, w), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] lab = labels_arr

    # Fresh labels form an 8-connectivity independent set, so this bound holds.
    cdef Py_ssize_t max_labels = ((h + 1) // 2) * ((w + 1) // 2) + 1
    parent_arr = np.zeros(max_labels + 1, dtype=np.int32)
    cdef cnp.int32_t[::1] parent = parent_arr

    cdef Py_ssize_t i, j, k
    cdef Py_ssize_t nxt = 0
    cdef Py_ssize_t best, root, r
    cdef cnp.int32_t neigh[4]
    cdef Py_ssize_t nn

    for i in range(h):
        for j in range(w):
            if m[i, j] == 0:
                continue
            nn = 0
            if j > 0 and m[i, j - 1]:
                neigh[nn] = lab[i, j - 1]; nn += 1
            if i > 0:
                if j > 0 and m[i - 1, j - 1]:
                    neigh[nn] = lab[i - 1, j - 1]; nn += 1
                if m[i - 1, j]:
                    neigh[nn] = lab[i - 1, j]; nn += 1
                if j + 1 < w and m[i - 1, j + 1]:
                    neigh[nn] = lab[i - 1, j + 1]; nn += 1
            if nn == 0:
                nxt += 1
                parent[nxt] = <cnp.int32_t> nxt
                lab[i, j] = <cnp.int32_t> nxt
            else:
                best = _find(parent, neigh[0])
                for k in range(1, nn):
                    root = _find(parent, neigh[k])
                    if root < best:
                        parent[best] = <cnp.int32_t> root
                        best = root
                    elif root > best:
                        parent[root] = <cnp.int32_t> best
                lab[i, j] = <cnp.int32_t> best

    if nxt == 0:
        return labels_arr, 0

    # Union-by-min keeps each component's root equal to its first (row-major)
    # provisional label, so compacting in ascending root order preserves the
    # first-pixel numbering.
    compact_arr = np.zeros(nxt + 1, dtype=np.int32)
    cdef cnp.int32_t[::1] compact = compact_arr
    cdef Py_ssize_t count = 0
    for k in range(1, nxt + 1):
        r = _find(parent, k)
        if r == k:
            count += 1
            compact[k] = <cnp.int32_t> count
    for i in range(h):
        for j in range(w):
            if lab[i, j] != 0:
                lab[i, j] = compact[_find(parent, lab[i, j])]
    return labels_arr, count


def component_stats(labels, Py_ssize_t count):
    """Bounding boxes (x0, y0, x1, y1; exclusive max) and pixel areas per label."""
    cdef cnp.int32_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    boxes_arr = np.zeros((count, 4), dtype=np.int64)
    areas_arr = np.zeros(count, dtype=np.int64)
    if count == 0:
        return boxes_arr, areas_arr
    cdef cnp.int64_t[:, ::1] boxes = boxes_arr
    cdef cnp.int64_t[::1] areas = areas_arr
    cdef Py_ssize_t h = lab.shape[0]
    cdef Py_ssize_t w = lab.shape[1]
    cdef Py_ssize_t i, j, c
    for c in range(count):
        boxes[c, 0] = w
        boxes[c, 1] = h
        boxes[c, 2] = -1
        boxes[c, 3] = -1
    for i in range(h):
        for j in range(w):
            c = lab[i, j]
            if c == 0:
                continue
            c -= 1
            if j < boxes[c, 0]:
                boxes[c, 0] = j
            if i < boxes[c, 1]:
                boxes[c, 1] = i
            if j > boxes[c, 2]:
                boxes[c, 2] = j
            if i > boxes[c, 3]:
                boxes[c, 3] = i
            areas[c] += 1
    for c in range(count):
        boxes[c, 2] += 1
        boxes[c, 3] += 1
    return boxes_arr, areas_arr


def component_max(labels, Py_ssize_t count, values):
    """Maximum of `values` over each labeled component."""
    cdef cnp.int32_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    cdef cnp.float64_t[:, ::1] val = np.ascontiguousarray(values, dtype=np.float64)
    out_arr = np.zeros(count, dtype=np.float64)
    if count == 0:
        return out_arr
    cdef cnp.float64_t[::1] out = out_arr
    seen_arr = np.zeros(count, dtype=np.uint8)
    cdef cnp.uint8_t[::1] seen = seen_arr
    cdef Py_ssize_t h = lab.shape[0]
    cdef Py_ssize_t w = lab.shape[1]
    cdef Py_ssize_t i, j, c
    for i in range(h):
        for j in range(w):
            c = lab[i, j]
            if c == 0:
                continue
            c -= 1
            if not seen[c] or val[i, j] > out[c]:
                out[c] = val[i, j]
                seen[c] = 1
    return out_arr


def splat_gaussians(out, boxes):
    """Max-composite one anisotropic Gaussian blob per box into `out`.

    Each blob has sigma = side/4 per axis, support limited to its box, and
    is normalized so its brightest covered pixel is exactly 1. Pixel values
    are taken at pixel centers (col + 0.5, row + 0.5).
    """
    if out.ndim != 2:
        raise ValueError("output grid must be 2-D")
    cdef cnp.float32_t[:, ::1] grid = out
    cdef cnp.float64_t[:, ::1] bx = np.ascontiguousarray(
        np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
    )
    cdef Py_ssize_t h = grid.shape[0]
    cdef Py_ssize_t w = grid.shape[1]
    cdef Py_ssize_t n = bx.shape[0]
    cdef Py_ssize_t b, i, j, ix0, ix1, iy0, iy1, pxi, pyi
    cdef double x0, y0, x1, y1, cx, cy, sx, sy, peak, dx, dy, v
    cdef double[::1] ex
    scratch = np.empty(w, dtype=np.float64)
    ex = scratch

    for b in range(n):
        x0 = bx[b, 0]; y0 = bx[b, 1]; x1 = bx[b, 2]; y1 = bx[b, 3]
        ix0 = <Py_ssize_t> floor(x0)
        iy0 = <Py_ssize_t> floor(y0)
        ix1 = <Py_ssize_t> ceil(x1)
        iy1 = <Py_ssize_t> ceil(y1)
        if ix0 < 0: ix0 = 0
        if iy0 < 0: iy0 = 0
        if ix1 > w: ix1 = w
        if iy1 > h: iy1 = h
        if ix0 >= ix1 or iy0 >= iy1:
            continue
        cx = 0.5 * (x0 + x1)
        cy = 0.5 * (y0 + y1)
        sx = (x1 - x0 if x1 - x0 > 1e-3 else 1e-3) / 4.0
        sy = (y1 - y0 if y1 - y0 > 1e-3 else 1e-3) / 4.0
        # The patch maximum sits at the covered pixel center nearest (cx, cy):
        # the blob is separable and decreasing away from the center.
        pxi = <Py_ssize_t> floor(cx)
        pyi = <Py_ssize_t> floor(cy)
        if pxi < ix0: pxi = ix0
        if pxi > ix1 - 1: pxi = ix1 - 1
        if pyi < iy0: pyi = iy0
        if pyi > iy1 - 1: pyi = iy1 - 1
        dx = (pxi + 0.5 - cx) / sx
        dy = (pyi + 0.5 - cy) / sy
        peak = exp(-0.5 * (dx * dx + dy * dy))
        if peak <= 0:
            peak = 1.0
        for j in range(ix0, ix1):
            dx = (j + 0.5 - cx) / sx
            ex[j] = exp(-0.5 * dx * dx)
        for i in range(iy0, iy1):
            dy = (i + 0.5 - cy) / sy
            dy = exp(-0.5 * dy * dy)
            for j in range(ix0, ix1):
                v = dy * ex[j] / peak
                if v > grid[i, j]:
                    grid[i, j] = <cnp.float32_t> v
    return None


def levenshtein(a, b):
    """Edit distance (insert/delete/substitute, unit costs)."""
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 0:
        return len(a)
    cdef const cnp.uint32_t[::1] ca = np.frombuffer(a.encode("utf-32-le"), dtype=np.uint32)
    cdef const cnp.uint32_t[::1] cb = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)
    cdef Py_ssize_t la = ca.shape[0]
    cdef Py_ssize_t lb = cb.shape[0]
    prev_arr = np.arange(lb + 1, dtype=np.int64)
    cur_arr = np.zeros(lb + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] prev = prev_arr
    cdef cnp.int64_t[::1] cur = cur_arr
    cdef cnp.int64_t[::1] tmp
    cdef Py_ssize_t i, j
    cdef cnp.int64_t cost, best
    for i in range(la):
        cur[0] = i + 1
        for j in range(lb):
            best = prev[j + 1] + 1
            if cur[j] + 1 < best:
                best = cur[j] + 1
            cost = prev[j] + (1 if ca[i] != cb[j] else 0)
            if cost < best:
                best = cost
            cur[j + 1] = best
        tmp = prev; prev = cur; cur = tmp
    return int(prev[lb])
