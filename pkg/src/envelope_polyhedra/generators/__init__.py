"""Seed geometry generators: solids, planar tessellations, prism layers."""

from ..regularity import PatchContext
from .layers import LayerBuild, build_prism_layer, prism_layer
from .solids import (
    ARCHIMEDEAN_KINDS,
    PLATONIC_KINDS,
    antiprism,
    archimedean,
    convex_surface,
    platonic,
    prism,
)
from .tilings import TILING_NAMES, TilingSpec, tessellation_patch

__all__ = [
    "ARCHIMEDEAN_KINDS", "PLATONIC_KINDS", "TILING_NAMES",
    "LayerBuild", "PatchContext", "TilingSpec",
    "antiprism", "archimedean", "build_prism_layer", "convex_surface",
    "platonic", "prism", "prism_layer", "tessellation_patch",
]
