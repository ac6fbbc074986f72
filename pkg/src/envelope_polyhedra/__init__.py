"""Envelope polyhedra: construction, measurement and classification."""

from .surface import (
    EdgeRecord,
    RotationWalk,
    Surface,
    build_surface,
    connected_components,
    euler_characteristic,
    genus,
    vertex_rotation,
)
from .metrics import (
    CongruenceClass,
    VertexFigure,
    congruent,
    dihedral_angle,
    face_regularity,
    vertex_angle_sum,
    vertex_figure,
)
from .regularity import RegularityReport, Table1Symbol, analyze, classify, descartes_check

__all__ = [
    "EdgeRecord", "RotationWalk", "Surface", "build_surface",
    "connected_components", "euler_characteristic", "genus", "vertex_rotation",
    "CongruenceClass", "VertexFigure", "congruent", "dihedral_angle",
    "face_regularity", "vertex_angle_sum", "vertex_figure",
    "RegularityReport", "Table1Symbol", "analyze", "classify", "descartes_check",
]
