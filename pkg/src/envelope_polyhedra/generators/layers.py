"""Single layers of open-ended prisms over a planar tessellation.

Adjacent cells contribute separate, geometrically coincident wall squares,
paired back to back across the top and bottom rims: an ant inside one cell
crosses a rim onto the inside of the neighboring cell.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

import numpy as np

from ..meshbuild import MeshBuilder
from ..regularity import PatchContext
from ..surface import Side, Surface, position_key
from .tilings import TilingSpec, tiling_faces


def _pt_key(v) -> Tuple[int, int]:
    return position_key((float(v[0]), float(v[1]), 0.0))[:2]


class LayerBuild:
    """prism_layer output plus rim bookkeeping for fin attachment."""

    def __init__(self, surface: Surface, context: PatchContext,
                 top_rims: Dict[tuple, Tuple[Side, Side]],
                 edge_geometry: Dict[tuple, Tuple[np.ndarray, np.ndarray]],
                 edge_cells: Dict[tuple, List[int]]):
        self.surface = surface
        self.context = context
        self.top_rims = top_rims          # tiling-edge key -> the two coincident top sides
        self.edge_geometry = edge_geometry  # tiling-edge key -> (2D endpoints)
        self.edge_cells = edge_cells      # tiling-edge key -> sizes of adjacent cells


def build_prism_layer(spec: TilingSpec, height: float = 1.0) -> LayerBuild:
    cells = tiling_faces(spec)
    mb = MeshBuilder()
    h = float(height)

    top_sides: Dict[tuple, List[Side]] = {}
    edge_geometry: Dict[tuple, Tuple[np.ndarray, np.ndarray]] = {}
    edge_cells: Dict[tuple, List[int]] = {}

    for ci, cell in enumerate(cells):
        n = len(cell)
        walls = []
        for j in range(n):
            p = cell[j]
            q = cell[(j + 1) % n]
            f = mb.face([
                (p[0], p[1], 0.0),
                (q[0], q[1], 0.0),
                (q[0], q[1], h),
                (p[0], p[1], h),
            ])
            walls.append(f)
            ekey = frozenset((_pt_key(p), _pt_key(q)))
            edge_geometry.setdefault(ekey, (np.asarray(p, float), np.asarray(q, float)))
            edge_cells.setdefault(ekey, []).append(n)
            mb.register(("top", ekey), f, 2)
            mb.register(("bot", ekey), f, 0)
            top_sides.setdefault(ekey, []).append((f, 2))
        for j in range(n):
            shared = _pt_key(cell[(j + 1) % n])
            mb.register(("vert", ci, shared), walls[j], 1)
            mb.register(("vert", ci, shared), walls[(j + 1) % n], 3)

    surf = mb.build()
    ctx = PatchContext.from_closed_rotations(surf)
    rims = {k: (v[0], v[1]) for k, v in top_sides.items() if len(v) == 2}
    return LayerBuild(surf, ctx, rims, edge_geometry, edge_cells)


def prism_layer(spec: TilingSpec, height: float = 1.0) -> Tuple[Surface, PatchContext]:
    """Open-top open-bottom prisms over each tile; see LayerBuild for rim access."""
    built = build_prism_layer(spec, height)
    return built.surface, built.context
