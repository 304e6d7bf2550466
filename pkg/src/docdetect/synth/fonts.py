"""Font discovery and glyph measurement.

Fonts are referenced by stem name ("DejaVuSans") or absolute path. Glyph
boxes come from actually rasterizing each glyph once and caching its tight
ink bounds relative to the draw origin, so annotations match the rendered
pixels exactly (FreeType output at integer pen positions is deterministic).
"""
from __future__ import annotations

import functools
import os

from PIL import Image, ImageDraw, ImageFont

from ..errors import FontError

_SYSTEM_FONT_DIRS = ["/usr/share/fonts", "/usr/local/share/fonts", os.path.expanduser("~/.fonts")]


@functools.lru_cache(maxsize=1)
def _font_index() -> dict[str, str]:
    dirs = list(_SYSTEM_FONT_DIRS)
    try:  # matplotlib ships the DejaVu family; use it when present
        import matplotlib

        dirs.append(os.path.join(os.path.dirname(matplotlib.__file__), "mpl-data", "fonts"))
    except ImportError:
        pass
    index: dict[str, str] = {}
    for root in dirs:
        if not os.path.isdir(root):
            continue
        for dirpath, _, files in os.walk(root):
            for fn in sorted(files):
                if fn.lower().endswith((".ttf", ".otf")):
                    index.setdefault(os.path.splitext(fn)[0], os.path.join(dirpath, fn))
    return index


@functools.lru_cache(maxsize=256)
def load_font(name: str, size: int) -> ImageFont.FreeTypeFont:
    """Resolve a font by path or stem name at a pixel size."""
    path = name
    if not os.path.isfile(path):
        path = _font_index().get(name, "")
    if not path:
        raise FontError(f"cannot find font {name!r} (searched {_SYSTEM_FONT_DIRS} and matplotlib)")
    try:
        return ImageFont.truetype(path, size)
    except OSError as e:
        raise FontError(f"cannot load font {name!r} from {path}: {e}") from e


@functools.lru_cache(maxsize=65536)
def glyph_extent(font_name: str, size: int, ch: str) -> tuple[float, tuple[int, int, int, int] | None]:
    """(advance, tight ink box) of one glyph.

    The box is relative to the draw origin (default "la" anchor) and comes
    from rasterizing the glyph; None for glyphs with no ink (e.g. space).
    """
    font = load_font(font_name, size)
    advance = float(font.getlength(ch))
    pad = 2 * size
    scratch = Image.new("L", (4 * size + 2 * pad, 2 * size + 2 * pad), 0)
    ImageDraw.Draw(scratch).text((pad, pad), ch, font=font, fill=255)
    bbox = scratch.getbbox()
    if bbox is None:
        return advance, None
    return advance, (bbox[0] - pad, bbox[1] - pad, bbox[2] - pad, bbox[3] - pad)


def line_height(font_name: str, size: int) -> int:
    ascent, descent = load_font(font_name, size).getmetrics()
    return ascent + descent
