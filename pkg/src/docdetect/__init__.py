"""docdetect: lightweight text detection for noisy scanned business documents.

Pipeline: synthetic page generation with character-level ground truth, a
small three-channel U-Net (character / inter-character / special-character
score maps), adversarial training, and connected-component post-processing
into word boxes, plus evaluation and benchmarking utilities.
"""

__version__ = "0.1.0"

from .geometry import Box, CharAnnotation, PageSample, Quad, iou, quad_to_box, transform_points

__all__ = [
    "__version__",
    "Box",
    "Quad",
    "CharAnnotation",
    "PageSample",
    "iou",
    "quad_to_box",
    "transform_points",
]
