"""Forward rendering and single-image de-rendering of solids of revolution."""

from .geometry import (
    Camera,
    CameraPose,
    FrontalBand,
    RadiusProfile,
    frontal_half,
    revolve,
    surface_normals,
    to_camera,
    view_directions,
)
from .shading import (
    EnvironmentMap,
    MaterialParams,
    SphericalGaussianLobe,
    compose_texture,
    diffuse_factor,
    inverse_tonemap,
    pixel_light_directions,
    reflect,
    sg_environment,
    specular_factor,
    tonemap,
)

__all__ = [
    "Camera",
    "CameraPose",
    "EnvironmentMap",
    "FrontalBand",
    "MaterialParams",
    "RadiusProfile",
    "SphericalGaussianLobe",
    "compose_texture",
    "diffuse_factor",
    "frontal_half",
    "inverse_tonemap",
    "pixel_light_directions",
    "reflect",
    "revolve",
    "sg_environment",
    "specular_factor",
    "surface_normals",
    "to_camera",
    "tonemap",
    "view_directions",
]
