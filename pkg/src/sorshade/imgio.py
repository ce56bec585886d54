"""PFM and PNG readers/writers.

PFM files are little-endian (scale line "-1.0"), rows stored bottom-to-top
per the format convention.  PNGs are 8-bit, written through Pillow with an
sRGB rendering-intent chunk; pixel values are the model's tone-mapped
outputs.
"""

from __future__ import annotations

import numpy as np
from PIL import Image
from PIL.PngImagePlugin import PngInfo


def write_pfm(path, data: np.ndarray):
    """Write a (H, W) or (H, W, 3) float array as a little-endian PFM."""
    data = np.asarray(data, dtype=np.float32)
    if data.ndim == 2:
        tag = b"Pf"
    elif data.ndim == 3 and data.shape[2] == 3:
        tag = b"PF"
    else:
        raise ValueError("PFM data must be (H, W) or (H, W, 3)")
    h, w = data.shape[:2]
    with open(path, "wb") as f:
        f.write(tag + b"\n")
        f.write(f"{w} {h}\n".encode())
        f.write(b"-1.0\n")
        f.write(np.flipud(data).astype("<f4").tobytes())


def read_pfm(path) -> np.ndarray:
    """Read a PFM file into a float64 array, (H, W) or (H, W, 3)."""
    with open(path, "rb") as f:
        tag = f.readline().strip()
        if tag == b"PF":
            channels = 3
        elif tag == b"Pf":
            channels = 1
        else:
            raise ValueError(f"not a PFM file: header {tag!r}")
        w, h = (int(t) for t in f.readline().split())
        scale = float(f.readline())
        count = w * h * channels
        raw = f.read(count * 4)
        if len(raw) != count * 4:
            raise ValueError("truncated PFM payload")
        dt = "<f4" if scale < 0 else ">f4"
        data = np.frombuffer(raw, dtype=dt).reshape(h, w, channels)
    data = np.flipud(data).astype(np.float64)
    return data[..., 0] if channels == 1 else data


def write_png(path, data: np.ndarray):
    """Write [0,1] float data as an 8-bit PNG (grayscale or RGB)."""
    arr = np.asarray(data, dtype=np.float64)
    u8 = np.clip(np.round(arr * 255.0), 0, 255).astype(np.uint8)
    if u8.ndim == 2:
        img = Image.fromarray(u8, mode="L")
    elif u8.ndim == 3 and u8.shape[2] == 3:
        img = Image.fromarray(u8, mode="RGB")
    else:
        raise ValueError("PNG data must be (H, W) or (H, W, 3)")
    info = PngInfo()
    info.add(b"sRGB", b"\x00")  # perceptual rendering intent
    img.save(path, format="PNG", pnginfo=info)


def read_png(path) -> np.ndarray:
    """Read an 8-bit PNG into floats in [0,1]; (H, W) for grayscale, (H, W, 3) else."""
    img = Image.open(path)
    if img.mode not in ("L", "RGB"):
        img = img.convert("RGB" if img.mode in ("RGBA", "P") else "L")
    arr = np.asarray(img, dtype=np.float64) / 255.0
    return arr
