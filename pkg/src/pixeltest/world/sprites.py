"""Procedural sprite bitmaps for the object classes.

Bitmaps are fixed per class (identical in every world) so a detector trained
in one world transfers to another; only backgrounds vary with the world seed.
Each sprite is a 16x16 RGBA uint8 array, alpha 0 = transparent.
"""

from __future__ import annotations

import numpy as np

SPRITE_SIZE = 16

BASE_CLASSES = ("crate", "barrel", "ammo_box")
NOVEL_CLASS = "health_pack"
ALL_CLASSES = BASE_CLASSES + (NOVEL_CLASS,)


def _blank() -> np.ndarray:
    return np.zeros((SPRITE_SIZE, SPRITE_SIZE, 4), dtype=np.uint8)


def _fill(img, y0, y1, x0, x1, rgb):
    img[y0:y1, x0:x1, :3] = rgb
    img[y0:y1, x0:x1, 3] = 255


def _crate() -> np.ndarray:
    img = _blank()
    _fill(img, 1, 15, 1, 15, (150, 100, 40))
    _fill(img, 1, 3, 1, 15, (110, 70, 25))
    _fill(img, 13, 15, 1, 15, (110, 70, 25))
    _fill(img, 1, 15, 1, 3, (110, 70, 25))
    _fill(img, 1, 15, 13, 15, (110, 70, 25))
    for i in range(3, 13):  # diagonal cross braces
        _fill(img, i, i + 1, i, i + 1, (190, 140, 70))
        _fill(img, i, i + 1, 15 - i, 16 - i, (190, 140, 70))
    return img


def _barrel() -> np.ndarray:
    img = _blank()
    _fill(img, 1, 15, 4, 12, (60, 90, 160))
    _fill(img, 0, 1, 5, 11, (40, 60, 110))
    _fill(img, 15, 16, 5, 11, (40, 60, 110))
    _fill(img, 4, 6, 4, 12, (140, 160, 210))
    _fill(img, 10, 12, 4, 12, (140, 160, 210))
    return img


def _ammo_box() -> np.ndarray:
    img = _blank()
    _fill(img, 5, 15, 1, 15, (90, 110, 45))
    _fill(img, 3, 5, 2, 14, (120, 140, 60))
    _fill(img, 7, 10, 4, 12, (210, 180, 40))
    return img


def _health_pack() -> np.ndarray:
    img = _blank()
    _fill(img, 2, 14, 2, 14, (235, 235, 235))
    _fill(img, 6, 10, 3, 13, (200, 30, 30))
    _fill(img, 3, 13, 6, 10, (200, 30, 30))
    return img


_BUILDERS = {
    "crate": _crate,
    "barrel": _barrel,
    "ammo_box": _ammo_box,
    "health_pack": _health_pack,
}


def sprite_bitmap(class_name: str) -> np.ndarray:
    if class_name not in _BUILDERS:
        raise KeyError(f"no sprite defined for class {class_name!r}")
    return _BUILDERS[class_name]()


def sprite_library(class_names=ALL_CLASSES) -> dict[str, np.ndarray]:
    return {name: sprite_bitmap(name) for name in class_names}
