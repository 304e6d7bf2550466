"""Seeded synthesis of noisy business-document pages with exact ground truth.

A page is laid out as text lines (words of letters/digits, occasionally with
an embedded special character), separator rows built from repeated special
characters, graphical rule lines (no annotations), then warped and finally
degraded with scan noise. All randomness flows from one seed.
"""
from __future__ import annotations

import string

import numpy as np
from PIL import Image, ImageDraw

from ..errors import LayoutError
from ..geometry import Box, CharAnnotation, PageSample
from .distort import apply_distortion
from .fonts import glyph_extent, line_height, load_font
from .noise import apply_noise
from .spec import SynthSpec

__all__ = ["generate_page", "render_layout"]

_WORD_ALPHABET = string.ascii_lowercase + string.ascii_uppercase + string.digits
# Specials that look natural inside a word (subset of the default special set).
_EMBEDDABLE = "-./:_"
_ISOLATED = "*|•-="
_SEPARATOR_GLYPHS = "-=_~.*"

_MAX_LAYOUT_RETRIES = 5


def generate_page(spec: SynthSpec, seed: int) -> PageSample:
    """Deterministically synthesize one page for (spec, seed)."""
    seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    root = np.random.SeedSequence(entropy=seed)
    s_layout, s_distort, s_noise = (int(s.generate_state(1, np.uint64)[0]) for s in root.spawn(3))

    last_err = None
    page = None
    for attempt in range(_MAX_LAYOUT_RETRIES):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=s_layout, spawn_key=(attempt,)))
        try:
            page = render_layout(spec, rng)
            break
        except LayoutError as e:
            last_err = e
    if page is None:
        raise LayoutError(
            f"layout failed after {_MAX_LAYOUT_RETRIES} retries on page {spec.page_size}: {last_err}"
        )

    page = apply_distortion(page, spec.distortion, s_distort)
    page = apply_noise(page, spec.noise, s_noise)
    return page


def render_layout(spec: SynthSpec, rng: np.random.Generator) -> PageSample:
    """Clean (noise-free, undistorted) page for one rng stream."""
    w, h = spec.page_size
    img = Image.new("L", (w, h), 255)
    draw = ImageDraw.Draw(img)
    chars: list[CharAnnotation] = []
    margin = spec.margin
    next_word_id = 0
    text_lines = 0
    y = float(margin)

    while True:
        if spec.max_text_lines is not None and text_lines >= spec.max_text_lines:
            break
        font = str(rng.choice(spec.font_names))
        size = int(rng.integers(spec.font_size_range[0], spec.font_size_range[1] + 1))
        lh = line_height(font, size)
        if y + lh > h - margin:
            break

        next_word_id = _draw_text_line(draw, chars, spec, rng, font, size, y, next_word_id)
        text_lines += 1
        y += lh + int(rng.integers(spec.line_spacing_range[0], spec.line_spacing_range[1] + 1))

        if rng.random() < spec.separator_row_prob:
            pad = int(round(spec.separator_pad * size))
            if y + pad + lh + pad <= h - margin:
                y += pad
                next_word_id = _draw_separator_row(
                    draw, chars, spec, rng, font, size, y, next_word_id
                )
                y += lh + pad

        if rng.random() < spec.rule_line_prob:
            ry = int(y - rng.integers(1, 4))
            if margin < ry < h - margin:
                shade = int(rng.integers(0, 90))
                draw.line([(margin, ry), (w - margin, ry)], fill=shade,
                          width=int(rng.integers(1, 3)))

    if not any(not c.is_special for c in chars):
        raise LayoutError(f"no regular word fits on a {w}x{h} page at sizes {spec.font_size_range}")

    image = np.asarray(img, dtype=np.float32) / 255.0
    return PageSample(image=image, chars=tuple(chars))


def _draw_text_line(draw, chars, spec, rng, font, size, y, next_word_id) -> int:
    w, h = spec.page_size
    margin = spec.margin
    x = float(margin + rng.integers(0, max(1, (w - 2 * margin) // 6)))
    space_adv = glyph_extent(font, size, " ")[0]
    n_words = int(rng.integers(spec.words_per_line_range[0], spec.words_per_line_range[1] + 1))

    for _ in range(n_words):
        if rng.random() < spec.isolated_special_prob:
            token = _pick(rng, [c for c in _ISOLATED if c in spec.special_char_set] or ["*"])
        else:
            token = _sample_word(spec, rng)
        width = sum(glyph_extent(font, size, ch)[0] for ch in token)
        if x + width > w - margin:
            break
        x = _draw_token(draw, chars, spec, font, size, x, y, token, next_word_id)
        next_word_id += 1
        x += space_adv * float(rng.uniform(1.0, 1.8))
    return next_word_id


def _draw_separator_row(draw, chars, spec, rng, font, size, y, next_word_id) -> int:
    w = spec.page_size[0]
    margin = spec.margin
    glyphs = [c for c in _SEPARATOR_GLYPHS if c in spec.special_char_set] or ["-"]
    ch = _pick(rng, glyphs)
    adv = glyph_extent(font, size, ch)[0]
    target = float(rng.uniform(0.3, 0.8)) * (w - 2 * margin)
    count = max(3, int(target / max(adv, 1.0)))
    x = float(margin + rng.integers(0, max(1, int(w - 2 * margin - count * adv) + 1)))
    _draw_token(draw, chars, spec, font, size, x, y, ch * count, next_word_id)
    return next_word_id + 1


def _draw_token(draw, chars, spec, font, size, x, y, token, word_id) -> float:
    """Draw one word/row character by character; returns the new pen x."""
    iy = int(round(y))
    ft = load_font(font, size)
    for ch in token:
        advance, rel = glyph_extent(font, size, ch)
        ix = int(round(x))
        if rel is not None:
            draw.text((ix, iy), ch, font=ft, fill=0)
            box = Box(ix + rel[0], iy + rel[1], ix + rel[2], iy + rel[3])
            chars.append(
                CharAnnotation(
                    box=box,
                    codepoint=ch,
                    word_id=word_id,
                    is_special=ch in spec.special_char_set,
                )
            )
        x += advance
    return x


def _sample_word(spec: SynthSpec, rng: np.random.Generator) -> str:
    n = int(rng.integers(spec.word_length_range[0], spec.word_length_range[1] + 1))
    letters = [_WORD_ALPHABET[i] for i in rng.integers(0, len(_WORD_ALPHABET), n)]
    embeddable = [c for c in _EMBEDDABLE if c in spec.special_char_set]
    if n >= 4 and embeddable and rng.random() < spec.embedded_special_prob:
        pos = int(rng.integers(1, n - 1))
        letters[pos] = _pick(rng, embeddable)
    return "".join(letters)


def _pick(rng: np.random.Generator, seq):
    return seq[int(rng.integers(0, len(seq)))]
