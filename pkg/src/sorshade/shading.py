"""Normalized Phong environment-map shading in unwrapped texture space.

The environment is a single-channel equirectangular grid; every pixel acts
as a directional light.  Diffuse and specular factors are plain sums over
the environment pixels with the negative cosines clamped to zero; there is
no solid-angle weighting, so the absolute scale of the factors depends on
the environment resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

GAMMA = 2.2

DEFAULT_ENV_SHAPE = (16, 48)
SHININESS_RANGE = (1.0, 196.0)
SPECULAR_ALBEDO_RANGE = (0.0, 2.0)


@dataclass
class EnvironmentMap:
    """Equirectangular single-channel radiance grid.

    Row index maps linearly to polar angle theta in [0, pi] measured from
    +Y (up); column index to azimuth phi in [0, 2*pi), phi=0 toward +Z.
    """

    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise ValueError("environment map must be a 2-D grid")
        if np.any(self.values < 0) or not np.all(np.isfinite(self.values)):
            raise ValueError("environment radiance must be finite and non-negative")

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @classmethod
    def uniform(cls, value: float, shape=DEFAULT_ENV_SHAPE) -> "EnvironmentMap":
        return cls(np.full(shape, float(value)))


@dataclass
class MaterialParams:
    """Per-texel diffuse albedo (linear) plus scalar shininess and specular albedo."""

    albedo: np.ndarray
    shininess: float
    specular_albedo: float

    def __post_init__(self):
        self.albedo = np.asarray(self.albedo, dtype=np.float64)
        if self.albedo.ndim != 3 or self.albedo.shape[2] != 3:
            raise ValueError("albedo must be an (H, W, 3) map")


@dataclass
class SphericalGaussianLobe:
    axis: np.ndarray
    bandwidth: float
    intensity: float

    def __post_init__(self):
        self.axis = np.asarray(self.axis, dtype=np.float64)
        n = np.linalg.norm(self.axis)
        if abs(n - 1.0) > 1e-9:
            raise ValueError("lobe axis must be a unit vector")


def pixel_light_directions(shape: tuple[int, int]) -> np.ndarray:
    """Unit light directions at the cell centers of an equirectangular grid.

    Returns an (H, W, 3) array; the direction points from the surface toward
    the light.
    """
    h, w = shape
    if h < 1 or w < 1:
        raise ValueError("environment dimensions must be positive")
    theta = np.pi * (np.arange(h) + 0.5) / h
    phi = 2.0 * np.pi * (np.arange(w) + 0.5) / w
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    x = st[:, None] * sp[None, :]
    y = np.broadcast_to(ct[:, None], (h, w))
    z = st[:, None] * cp[None, :]
    return np.stack([x, y, z], axis=-1)


def solid_angles(shape: tuple[int, int]) -> np.ndarray:
    """Solid angle of each equirectangular cell (sums to 4*pi)."""
    h, w = shape
    theta = np.pi * (np.arange(h) + 0.5) / h
    dtheta = np.pi / h
    dphi = 2.0 * np.pi / w
    return np.broadcast_to((np.sin(theta) * dtheta * dphi)[:, None], (h, w)).copy()


def _check_unit(vectors: np.ndarray, tol: float, what: str):
    norms = np.linalg.norm(vectors, axis=-1)
    if np.any(np.abs(norms - 1.0) > tol):
        raise ValueError(f"{what} must be unit vectors (tolerance {tol})")


def diffuse_factor(env, normals: np.ndarray) -> np.ndarray:
    """Diffuse lighting factor: sum_i E_i * max(L_i . N, 0) per normal.

    ``normals`` is (..., 3); the result has the leading shape of ``normals``.
    """
    values = env.values if isinstance(env, EnvironmentMap) else np.asarray(env, dtype=np.float64)
    n = np.asarray(normals, dtype=np.float64)
    _check_unit(n, 1e-4, "normals")
    dirs = pixel_light_directions(values.shape).reshape(-1, 3)
    dots = np.maximum(n.reshape(-1, 3) @ dirs.T, 0.0)
    out = dots @ values.reshape(-1)
    return out.reshape(n.shape[:-1])


def reflect(light: np.ndarray, normal: np.ndarray) -> np.ndarray:
    """Mirror ``light`` about ``normal``: 2*(L.N)*N - L (unit in, unit out)."""
    light = np.asarray(light, dtype=np.float64)
    normal = np.asarray(normal, dtype=np.float64)
    dot = np.sum(light * normal, axis=-1, keepdims=True)
    return 2.0 * dot * normal - light


def specular_factor(env, normals: np.ndarray, view_dirs: np.ndarray, shininess: float) -> np.ndarray:
    """Normalized Phong specular factor.

    I_s = (alpha+1)/(2*pi) * sum_i E_i * max(R_i . P, 0)^alpha, where R_i
    mirrors the light direction about the normal.  Computed equivalently via
    the reflected view direction (R_i . P == L_i . reflect(P, N)).
    """
    if not np.isfinite(shininess):
        raise ValueError("shininess must be finite")
    if shininess < 1.0:
        raise ValueError("shininess must be >= 1")
    values = env.values if isinstance(env, EnvironmentMap) else np.asarray(env, dtype=np.float64)
    n = np.asarray(normals, dtype=np.float64)
    p = np.asarray(view_dirs, dtype=np.float64)
    _check_unit(n, 1e-4, "normals")
    _check_unit(p, 1e-4, "view directions")
    rv = reflect(p, n)
    dirs = pixel_light_directions(values.shape).reshape(-1, 3)
    dots = np.maximum(rv.reshape(-1, 3) @ dirs.T, 0.0)
    out = (dots ** shininess) @ values.reshape(-1)
    out *= (shininess + 1.0) / (2.0 * np.pi)
    return out.reshape(n.shape[:-1])


def tonemap(x):
    """Display tone map x -> x**(1/2.2); rejects negative input."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(x < 0):
        raise ValueError("tonemap input must be non-negative")
    return np.power(x, 1.0 / GAMMA)


def inverse_tonemap(y):
    """Inverse of :func:`tonemap`: y -> y**2.2."""
    y = np.asarray(y, dtype=np.float64)
    if np.any(y < 0):
        raise ValueError("inverse_tonemap input must be non-negative")
    return np.power(y, GAMMA)


def compose_texture(material: MaterialParams, i_d: np.ndarray, i_s: np.ndarray) -> np.ndarray:
    """Tone-mapped composition tau(A * I_d + rho * I_s), clamped to [0, 1]."""
    a = material.albedo
    i_d = np.asarray(i_d, dtype=np.float64)
    i_s = np.asarray(i_s, dtype=np.float64)
    if a.shape[:2] != i_d.shape or a.shape[:2] != i_s.shape:
        raise ValueError("albedo and lighting factor dimensions must agree")
    linear = a * i_d[..., None] + material.specular_albedo * i_s[..., None]
    return np.clip(tonemap(np.maximum(linear, 0.0)), 0.0, 1.0)


def sg_environment(lobes, shape=DEFAULT_ENV_SHAPE) -> EnvironmentMap:
    """Environment map from 1-3 spherical Gaussian lobes, clipped to [0, 1].

    Radiance at pixel direction eta: sum_k sqrt(lambda_k) * F_k *
    exp(-lambda_k * (1 - eta . xi_k)).
    """
    if not 1 <= len(lobes) <= 3:
        raise ValueError("expected between 1 and 3 lobes")
    dirs = pixel_light_directions(shape)
    vals = np.zeros(shape, dtype=np.float64)
    for lobe in lobes:
        cos = np.einsum("hwc,c->hw", dirs, lobe.axis)
        vals += math.sqrt(lobe.bandwidth) * lobe.intensity * np.exp(-lobe.bandwidth * (1.0 - cos))
    return EnvironmentMap(np.clip(vals, 0.0, 1.0))


def upsample_normals(grid_normals: np.ndarray, out_shape: tuple[int, int]) -> np.ndarray:
    """Bilinearly upsample an (L, B, 3) normal grid to a texel grid, renormalized.

    Grid row L-1 (object top) maps to texture row 0.
    """
    flipped = grid_normals[::-1]
    out = bilinear_grid_sample(flipped, out_shape)
    norms = np.linalg.norm(out, axis=-1, keepdims=True)
    return out / np.maximum(norms, 1e-12)


def bilinear_grid_sample(grid: np.ndarray, out_shape: tuple[int, int]) -> np.ndarray:
    """Sample an (L, B, [C]) grid at the texel centers of an (H, W) texture.

    Texel center (i, j) reads the grid at continuous coordinates
    ((i+0.5)*(L-1)/H, (j+0.5)*(B-1)/W), so the grid nodes span the texture
    edge to edge.
    """
    L, B = grid.shape[:2]
    H, W = out_shape
    r = (np.arange(H) + 0.5) / H * (L - 1)
    c = (np.arange(W) + 0.5) / W * (B - 1)
    return _interp2(grid, r, c)


def _interp2(grid: np.ndarray, r: np.ndarray, c: np.ndarray) -> np.ndarray:
    L, B = grid.shape[:2]
    r0 = np.clip(np.floor(r).astype(int), 0, L - 2)
    c0 = np.clip(np.floor(c).astype(int), 0, B - 2)
    fr = np.clip(r - r0, 0.0, 1.0)[:, None]
    fc = np.clip(c - c0, 0.0, 1.0)[None, :]
    g00 = grid[r0][:, c0]
    g01 = grid[r0][:, c0 + 1]
    g10 = grid[r0 + 1][:, c0]
    g11 = grid[r0 + 1][:, c0 + 1]
    if grid.ndim == 3:
        fr = fr[..., None]
        fc = fc[..., None]
    return (
        g00 * (1 - fr) * (1 - fc)
        + g01 * (1 - fr) * fc
        + g10 * fr * (1 - fc)
        + g11 * fr * fc
    )
