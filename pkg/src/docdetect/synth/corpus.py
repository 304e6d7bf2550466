"""Corpus I/O: write generated pages to disk and load them back.

On-disk layout per corpus directory:
    page_00000.png   8-bit grayscale image
    page_00000.json  {"chars": [{"box": [x0,y0,x1,y1], "cp": "a",
                                 "word": 0, "special": false}, ...],
                      "width": W, "height": H}
    manifest.json    generator version, spec echo, per-page seeds

Boxes are stored as floats, so annotation round-trips are exact; only the
image passes through 8-bit quantization.
"""
from __future__ import annotations

import json
import multiprocessing
import os

import numpy as np
from PIL import Image

from .. import __version__
from ..errors import CorpusError
from ..geometry import Box, CharAnnotation, PageSample
from .generator import generate_page
from .spec import SynthSpec

__all__ = [
    "write_corpus",
    "load_corpus",
    "load_page",
    "page_to_annotations",
    "annotations_to_chars",
    "page_seeds",
]

MANIFEST_NAME = "manifest.json"


def page_to_annotations(page: PageSample) -> dict:
    return {
        "chars": [
            {
                "box": list(c.box.as_tuple()),
                "cp": c.codepoint,
                "word": c.word_id,
                "special": c.is_special,
            }
            for c in page.chars
        ],
        "width": page.width,
        "height": page.height,
    }


def annotations_to_chars(doc: dict, path: str = "<annotations>") -> tuple[CharAnnotation, ...]:
    try:
        return tuple(
            CharAnnotation(
                box=Box(*[float(v) for v in c["box"]]),
                codepoint=c["cp"],
                word_id=int(c["word"]),
                is_special=bool(c["special"]),
            )
            for c in doc["chars"]
        )
    except (KeyError, TypeError, ValueError) as e:
        raise CorpusError(f"{path}: malformed annotation document: {e}") from e


def page_seeds(spec: SynthSpec, count: int) -> list[int]:
    """Per-page seeds derived from the spec seed; stable across runs."""
    root = np.random.SeedSequence(entropy=int(spec.seed) & 0xFFFFFFFFFFFFFFFF)
    return [int(s.generate_state(1, np.uint64)[0]) for s in root.spawn(count)]


def _write_one(args) -> dict:
    spec, index, seed, out_dir = args
    page = generate_page(spec, seed)
    image_name = f"page_{index:05d}.png"
    ann_name = f"page_{index:05d}.json"
    u8 = (np.clip(page.image, 0, 1) * 255).round().astype(np.uint8)
    Image.fromarray(u8, mode="L").save(os.path.join(out_dir, image_name))
    with open(os.path.join(out_dir, ann_name), "w") as f:
        json.dump(page_to_annotations(page), f)
    return {"index": index, "image": image_name, "annotations": ann_name, "seed": seed}


def write_corpus(spec: SynthSpec, count: int, out_dir: str, workers: int = 1) -> dict:
    """Generate `count` pages into out_dir and return the written manifest."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    os.makedirs(out_dir, exist_ok=True)
    seeds = page_seeds(spec, count)
    jobs = [(spec, i, seeds[i], out_dir) for i in range(count)]
    if workers > 1 and count > 1:
        with multiprocessing.Pool(workers) as pool:
            entries = pool.map(_write_one, jobs)
    else:
        entries = [_write_one(j) for j in jobs]
    manifest = {
        "format_version": 1,
        "generator_version": __version__,
        "spec": spec.to_dict(),
        "count": count,
        "pages": sorted(entries, key=lambda e: e["index"]),
    }
    with open(os.path.join(out_dir, MANIFEST_NAME), "w") as f:
        json.dump(manifest, f, indent=2)
    return manifest


def load_page(image_path: str, ann_path: str) -> PageSample:
    try:
        img = np.asarray(Image.open(image_path).convert("L"), dtype=np.float32) / 255.0
    except OSError as e:
        raise CorpusError(f"{image_path}: cannot read image: {e}") from e
    try:
        with open(ann_path) as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CorpusError(f"{ann_path}: cannot read annotations: {e}") from e
    if (doc.get("height"), doc.get("width")) != img.shape:
        raise CorpusError(
            f"{ann_path}: size {doc.get('width')}x{doc.get('height')} does not match "
            f"image {img.shape[1]}x{img.shape[0]}"
        )
    return PageSample(image=img, chars=annotations_to_chars(doc, ann_path))


def read_manifest(corpus_dir: str) -> dict:
    path = os.path.join(corpus_dir, MANIFEST_NAME)
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CorpusError(f"{path}: cannot read manifest: {e}") from e


def load_corpus(corpus_dir: str, limit: int | None = None) -> list[PageSample]:
    """Load all pages listed in a corpus manifest."""
    manifest = read_manifest(corpus_dir)
    pages = []
    for entry in manifest.get("pages", [])[:limit]:
        pages.append(
            load_page(
                os.path.join(corpus_dir, entry["image"]),
                os.path.join(corpus_dir, entry["annotations"]),
            )
        )
    return pages
