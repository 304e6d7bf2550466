"""Synthetic noisy-document generation with character-level ground truth."""

from .corpus import load_corpus, load_page, page_seeds, write_corpus
from .distort import apply_distortion, sample_elastic, sample_homography, warp_page
from .generator import generate_page, render_layout
from .noise import apply_noise
from .spec import DEFAULT_SPECIAL_CHARS, DistortionSpec, NoiseSpec, SynthSpec, default_spec

__all__ = [
    "SynthSpec",
    "NoiseSpec",
    "DistortionSpec",
    "DEFAULT_SPECIAL_CHARS",
    "default_spec",
    "generate_page",
    "render_layout",
    "apply_distortion",
    "apply_noise",
    "sample_homography",
    "sample_elastic",
    "warp_page",
    "write_corpus",
    "load_corpus",
    "load_page",
    "page_seeds",
]
