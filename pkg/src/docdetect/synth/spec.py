"""Configuration types for the synthetic page generator.

Everything the generator does is driven by these specs plus a seed, so a
(page spec, seed) pair fully determines a page.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace

__all__ = ["NoiseSpec", "DistortionSpec", "SynthSpec", "DEFAULT_SPECIAL_CHARS", "default_spec"]

# Punctuation-like glyphs that double as layout separators. Config knob; this
# is the default set used when none is given.
DEFAULT_SPECIAL_CHARS = frozenset("-_*|=~.:,;•/")


def _check_range(name: str, lo, hi, minimum=0):
    if lo < minimum or hi < minimum or lo > hi:
        raise ValueError(f"{name} must satisfy {minimum} <= low <= high, got ({lo}, {hi})")


def _check_prob(name: str, p: float):
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"{name} must be in [0, 1], got {p}")


@dataclass(frozen=True)
class NoiseSpec:
    """Scan-noise model. The all-zero default is the identity (no noise)."""

    dot_density: float = 0.0  # expected dots per megapixel
    short_line_count_range: tuple[int, int] = (0, 0)
    blur_sigma_range: tuple[float, float] = (0.0, 0.0)
    salt_pepper_prob: float = 0.0
    background_texture_strength: float = 0.0
    jpeg_artifact_quality_range: tuple[int, int] = (0, 0)  # (0, 0) disables

    def __post_init__(self):
        if self.dot_density < 0:
            raise ValueError(f"dot_density must be >= 0, got {self.dot_density}")
        _check_range("short_line_count_range", *self.short_line_count_range)
        _check_range("blur_sigma_range", *self.blur_sigma_range)
        _check_prob("salt_pepper_prob", self.salt_pepper_prob)
        _check_prob("background_texture_strength", self.background_texture_strength)
        _check_range("jpeg_artifact_quality_range", *self.jpeg_artifact_quality_range)

    @property
    def is_identity(self) -> bool:
        return (
            self.dot_density == 0
            and self.short_line_count_range[1] == 0
            and self.blur_sigma_range[1] == 0
            and self.salt_pepper_prob == 0
            and self.background_texture_strength == 0
            and self.jpeg_artifact_quality_range[1] == 0
        )


@dataclass(frozen=True)
class DistortionSpec:
    """Spatial warp model: rotation + perspective jitter + elastic field."""

    max_rotation_deg: float = 0.0
    max_perspective_jitter: float = 0.0  # fraction of page size
    elastic_strength: float = 0.0  # 0..1

    def __post_init__(self):
        for name in ("max_rotation_deg", "max_perspective_jitter", "elastic_strength"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    @property
    def is_identity(self) -> bool:
        return (
            self.max_rotation_deg == 0
            and self.max_perspective_jitter == 0
            and self.elastic_strength == 0
        )


@dataclass(frozen=True)
class SynthSpec:
    """Everything needed to synthesize one population of pages."""

    page_size: tuple[int, int] = (256, 256)  # (width, height)
    font_names: tuple[str, ...] = ("DejaVuSans", "DejaVuSerif", "DejaVuSansMono")
    font_size_range: tuple[int, int] = (11, 18)
    special_char_set: frozenset[str] = DEFAULT_SPECIAL_CHARS
    separator_row_prob: float = 0.15
    rule_line_prob: float = 0.1
    noise: NoiseSpec = field(default_factory=NoiseSpec)
    distortion: DistortionSpec = field(default_factory=DistortionSpec)
    seed: int = 0

    # Layout style knobs (distributions are ours to pick).
    margin: int = 10
    line_spacing_range: tuple[int, int] = (4, 12)
    max_text_lines: int | None = None  # None = fill the page
    words_per_line_range: tuple[int, int] = (2, 5)
    word_length_range: tuple[int, int] = (2, 8)
    embedded_special_prob: float = 0.12
    isolated_special_prob: float = 0.05
    separator_pad: float = 1.0  # extra blank space around separator rows, x font size

    def __post_init__(self):
        w, h = self.page_size
        if w < 64 or h < 64:
            raise ValueError(f"page dimensions must be >= 64, got {self.page_size}")
        if not self.font_names:
            raise ValueError("font pool must not be empty")
        _check_range("font_size_range", *self.font_size_range, minimum=4)
        for name in ("separator_row_prob", "rule_line_prob", "embedded_special_prob",
                     "isolated_special_prob"):
            _check_prob(name, getattr(self, name))
        object.__setattr__(self, "font_names", tuple(self.font_names))
        object.__setattr__(self, "special_char_set", frozenset(self.special_char_set))
        _check_range("line_spacing_range", *self.line_spacing_range)
        _check_range("words_per_line_range", *self.words_per_line_range, minimum=1)
        _check_range("word_length_range", *self.word_length_range, minimum=1)
        if self.max_text_lines is not None and self.max_text_lines < 1:
            raise ValueError("max_text_lines must be >= 1 or None")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["special_char_set"] = sorted(self.special_char_set)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SynthSpec":
        d = dict(d)
        known = cls.__dataclass_fields__
        unknown = set(d) - set(known)
        if unknown:
            raise ValueError(f"unknown SynthSpec fields: {sorted(unknown)}")
        if "noise" in d and isinstance(d["noise"], dict):
            d["noise"] = NoiseSpec(**{k: _as_tuple(v) for k, v in d["noise"].items()})
        if "distortion" in d and isinstance(d["distortion"], dict):
            d["distortion"] = DistortionSpec(**d["distortion"])
        if "special_char_set" in d:
            d["special_char_set"] = frozenset(d["special_char_set"])
        for key in ("page_size", "font_names", "font_size_range", "line_spacing_range",
                    "words_per_line_range", "word_length_range"):
            if key in d and isinstance(d[key], list):
                d[key] = tuple(d[key])
        return cls(**d)

    def with_(self, **kwargs) -> "SynthSpec":
        return replace(self, **kwargs)


def _as_tuple(v):
    return tuple(v) if isinstance(v, list) else v


def default_spec(**overrides) -> SynthSpec:
    """A realistic noisy-scan spec: dots, short lines, blur, texture, mild warp."""
    base = SynthSpec(
        noise=NoiseSpec(
            dot_density=40.0,
            short_line_count_range=(0, 6),
            blur_sigma_range=(0.3, 0.9),
            salt_pepper_prob=0.0008,
            background_texture_strength=0.2,
            jpeg_artifact_quality_range=(60, 90),
        ),
        distortion=DistortionSpec(max_rotation_deg=1.5, max_perspective_jitter=0.006),
    )
    return base.with_(**overrides) if overrides else base
