"""Surface-of-revolution geometry: vertex grids, normals, camera transforms.

Conventions used throughout the package:

* Object frame: the axis of revolution is the +Y axis, the object base sits
  at y=0 and the top at y=height.  Grid column k lies at azimuth
  ``phi_k = 2*pi*k/K`` with position ``(r*sin(phi), y, r*cos(phi))``, so
  column 0 faces +Z and column K/2 faces the camera at zero pose.
* Pose transform (object -> camera-target frame):
  ``p' = Rz(roll) @ Rx(pitch) @ p + (tx, ty, 0)``.  Rotation is about the
  world origin (the object's base center); roll is the outermost rotation,
  i.e. an in-image rotation about the optical axis direction.
* Camera: fixed intrinsics, square image, vertical/horizontal FOV of 10
  degrees.  The camera center sits at ``(0, 0.5, -distance)`` looking along
  +Z, with the distance chosen so a unit-height object fills 80% of the
  frame height.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Optimizer box constraints (also the sane ranges for hand-built inputs).
RADIUS_RANGE = (0.05, 0.9)
HEIGHT_RANGE = (0.5, 0.95)
PITCH_RANGE = (0.0, 20.0)
ROLL_RANGE = (-10.0, 10.0)
TRANSLATION_RANGE = (-0.2, 0.2)

DEFAULT_L = 32
DEFAULT_K = 96

# Fraction of the frame height a unit-height object occupies at zero pose.
FRAME_FILL = 0.8
# Height of the camera center (and of the optical axis) in world units:
# the mid-height of a unit-height object.
CAMERA_LOOK_Y = 0.5


@dataclass
class RadiusProfile:
    """Discretized generatrix: radii at evenly spaced heights over [0, height]."""

    radii: np.ndarray
    height: float

    def __post_init__(self):
        self.radii = np.asarray(self.radii, dtype=np.float64)
        if self.radii.ndim != 1 or self.radii.shape[0] < 2:
            raise ValueError("radii must be a 1-D vector with at least 2 entries")
        if not np.all(np.isfinite(self.radii)):
            raise ValueError("radii must be finite")
        if np.any(self.radii < 0):
            raise ValueError("radii must be non-negative")
        if not (np.isfinite(self.height) and self.height > 0):
            raise ValueError("height must be a positive finite number")

    @property
    def num_rows(self) -> int:
        return self.radii.shape[0]

    def row_heights(self) -> np.ndarray:
        """Heights of the grid rows, evenly spaced over [0, height]."""
        return np.linspace(0.0, self.height, self.num_rows)

    def radius_at(self, y) -> np.ndarray:
        """Piecewise-linear radius at arbitrary heights (clamped to [0, height])."""
        y = np.clip(np.asarray(y, dtype=np.float64), 0.0, self.height)
        return np.interp(y, self.row_heights(), self.radii)

    def slope_at(self, y) -> np.ndarray:
        """dr/dy of the piecewise-linear profile (segment slope, midpoint at knots)."""
        y = np.asarray(y, dtype=np.float64)
        ys = self.row_heights()
        seg = np.clip(np.searchsorted(ys, y, side="right") - 1, 0, self.num_rows - 2)
        dy = ys[1] - ys[0]
        return (self.radii[seg + 1] - self.radii[seg]) / dy


@dataclass
class CameraPose:
    """Pitch/roll Euler angles in degrees plus X/Y translation in object units."""

    pitch: float = 0.0
    roll: float = 0.0
    tx: float = 0.0
    ty: float = 0.0

    def rotation(self) -> np.ndarray:
        """3x3 rotation matrix Rz(roll) @ Rx(pitch)."""
        return _rot_z(math.radians(self.roll)) @ _rot_x(math.radians(self.pitch))

    def translation(self) -> np.ndarray:
        return np.array([self.tx, self.ty, 0.0])

    def as_array(self) -> np.ndarray:
        return np.array([self.pitch, self.roll, self.tx, self.ty])


@dataclass
class Camera:
    """Fixed-intrinsics projective camera, square pixels."""

    fov_deg: float = 10.0
    width: int = 256
    height: int = 256

    @property
    def tan_half_fov(self) -> float:
        return math.tan(math.radians(self.fov_deg) / 2.0)

    @property
    def distance(self) -> float:
        """Distance from the camera center to the z=0 plane."""
        return 0.5 / (FRAME_FILL * self.tan_half_fov)

    @property
    def center(self) -> np.ndarray:
        return np.array([0.0, CAMERA_LOOK_Y, -self.distance])

    def project(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Project points (...,3) to pixel coordinates (u right, v down).

        Returns (pixels (...,2), depth (...,)).  Depth is the distance along
        the optical axis; points with depth <= 0 are behind the camera.
        """
        p = np.asarray(points, dtype=np.float64)
        depth = p[..., 2] + self.distance
        with np.errstate(divide="ignore", invalid="ignore"):
            xn = p[..., 0] / (depth * self.tan_half_fov)
            yn = (p[..., 1] - CAMERA_LOOK_Y) / (depth * self.tan_half_fov)
        u = (xn + 1.0) * 0.5 * self.width
        v = (1.0 - yn) * 0.5 * self.height
        return np.stack([u, v], axis=-1), depth

    def pixel_rays(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Unnormalized ray directions through pixel coordinates (u, v).

        The ray is ``center + t * dir`` with dir_z == 1, so t equals depth.
        """
        xn = 2.0 * np.asarray(u) / self.width - 1.0
        yn = 1.0 - 2.0 * np.asarray(v) / self.height
        d = np.stack(
            [xn * self.tan_half_fov, yn * self.tan_half_fov, np.ones_like(xn)],
            axis=-1,
        )
        return d


def _rot_x(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[1, 0, 0], [0, c, -s], [0, s, c]], dtype=np.float64)


def _rot_z(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]], dtype=np.float64)


def revolve(profile: RadiusProfile, K: int = DEFAULT_K) -> np.ndarray:
    """Revolve a radius profile into an (L, K, 3) vertex grid.

    Row l sits at height ``height*l/(L-1)``; column k at azimuth ``2*pi*k/K``
    with radial distance exactly ``radii[l]``.
    """
    if K < 3:
        raise ValueError("K must be at least 3")
    r = profile.radii
    y = profile.row_heights()
    phi = 2.0 * np.pi * np.arange(K) / K
    x = r[:, None] * np.sin(phi)[None, :]
    z = r[:, None] * np.cos(phi)[None, :]
    yy = np.broadcast_to(y[:, None], x.shape)
    return np.stack([x, yy, z], axis=-1)


def column_angles(K: int) -> np.ndarray:
    """Azimuth of each grid column."""
    return 2.0 * np.pi * np.arange(K) / K


def surface_normals(grid: np.ndarray) -> np.ndarray:
    """Outward unit normals of an (L, K, 3) vertex grid.

    Normals come from the cross product of central differences along the
    angular (cyclic) and height (one-sided at the ends) directions, which
    averages the cross products of the adjacent faces.  Degenerate
    neighborhoods fall back to the radial direction, and zero-radius rows
    (closed apex) to the axial direction.
    """
    g = np.asarray(grid, dtype=np.float64)
    L, K, _ = g.shape
    t_ang = np.roll(g, -1, axis=1) - np.roll(g, 1, axis=1)
    t_h = np.empty_like(g)
    t_h[1:-1] = g[2:] - g[:-2]
    t_h[0] = g[1] - g[0]
    t_h[-1] = g[-1] - g[-2]
    n = np.cross(t_ang, t_h)
    norm = np.linalg.norm(n, axis=-1)

    # Fallbacks: radial direction where the local area vanished, axial at
    # zero-radius end rows (closed bottom/top).
    radial = g.copy()
    radial[..., 1] = 0.0
    rad_len = np.linalg.norm(radial, axis=-1)
    phi = column_angles(K)
    unit_radial = np.stack(
        [np.sin(phi), np.zeros(K), np.cos(phi)], axis=-1
    )[None, :, :] * np.ones((L, 1, 1))
    safe = rad_len > 1e-12
    unit_radial = np.where(safe[..., None], radial / np.maximum(rad_len, 1e-12)[..., None], unit_radial)

    axial = np.zeros_like(g)
    axial[..., 1] = 1.0
    axial[0, :, 1] = -1.0

    degen = norm < 1e-12
    out = np.where(degen[..., None], unit_radial, n / np.maximum(norm, 1e-12)[..., None])
    zero_radius = rad_len < 1e-12
    apex = degen & zero_radius & (np.arange(L)[:, None] % (L - 1) == 0)
    out = np.where(apex[..., None], axial, out)
    return out


def to_camera(grid: np.ndarray, pose: CameraPose) -> np.ndarray:
    """Apply the rigid pose transform Rz(roll) @ Rx(pitch) @ p + (tx, ty, 0)."""
    arr = pose.as_array()
    if not np.all(np.isfinite(arr)):
        raise ValueError("pose parameters must be finite")
    R = pose.rotation()
    return np.asarray(grid, dtype=np.float64) @ R.T + pose.translation()


def from_camera(grid: np.ndarray, pose: CameraPose) -> np.ndarray:
    """Exact inverse of :func:`to_camera` for the same pose."""
    R = pose.rotation()
    return (np.asarray(grid, dtype=np.float64) - pose.translation()) @ R


def view_directions(points: np.ndarray, cam: Camera) -> np.ndarray:
    """Unit vectors from camera-space surface points toward the camera center."""
    p = np.asarray(points, dtype=np.float64)
    d = cam.center - p
    norm = np.linalg.norm(d, axis=-1)
    if np.any(norm < 1e-9):
        raise ValueError("surface point coincides with the camera center")
    return d / norm[..., None]


@dataclass
class FrontalBand:
    """Contiguous (cyclic) column band facing the camera."""

    indices: np.ndarray    # column indices into the full grid, length K//3
    mask: np.ndarray       # boolean over the K columns
    grid: np.ndarray       # (L, K//3, 3) camera-space subset

    @property
    def num_columns(self) -> int:
        return self.indices.shape[0]


def frontal_half(grid_cam: np.ndarray, pose: CameraPose, cam: Camera | None = None) -> FrontalBand:
    """Select the frontal third of the columns of a camera-space grid.

    The band is centered on the column whose outward normal is most
    anti-parallel to the mean camera viewing ray.  Scoring is done on the
    roll-free configuration (roll is the outermost rotation, a pure in-image
    rotation), so the selected column indices do not depend on roll.
    """
    cam = cam or Camera()
    g = np.asarray(grid_cam, dtype=np.float64)
    L, K, _ = g.shape
    nf = K // 3

    # Undo roll about the origin: p0 = Rz(-roll) @ (p - t) + t reproduces the
    # zero-roll camera-space grid exactly.
    Rz = _rot_z(math.radians(-pose.roll))
    t = pose.translation()
    g0 = (g - t) @ Rz.T + t

    normals = surface_normals(g0)
    rays = g0.reshape(-1, 3) - cam.center
    mean_ray = rays.mean(axis=0)
    mean_ray /= np.linalg.norm(mean_ray)
    score = np.einsum("lkc,c->k", normals, mean_ray) / L
    center = int(np.argmin(score))

    start = center - nf // 2
    indices = (start + np.arange(nf)) % K
    mask = np.zeros(K, dtype=bool)
    mask[indices] = True
    return FrontalBand(indices=indices, mask=mask, grid=g[:, indices, :])
