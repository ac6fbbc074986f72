"""Incremental mesh accumulator used by generators and catalog builders.

Deduplicates vertices by position and lets constructions register explicit
side pairings by arbitrary hashable keys ("two sides registered under the
same key get paired").
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from .surface import POSITION_TOL, Side, Surface, build_surface, position_key


class MeshBuilder:
    def __init__(self, tol: float = POSITION_TOL):
        self.tol = tol
        self.points: List[Tuple[float, float, float]] = []
        self._index: Dict[Tuple[int, int, int], int] = {}
        self.faces: List[Tuple[int, ...]] = []
        self._pair_slots: Dict[Hashable, List[Side]] = {}
        self._explicit: List[Tuple[Side, Side]] = []

    def vertex(self, point) -> int:
        key = position_key(point, self.tol)
        idx = self._index.get(key)
        if idx is None:
            idx = len(self.points)
            self.points.append(tuple(float(c) for c in point))
            self._index[key] = idx
        return idx

    def face(self, points) -> int:
        ids = tuple(p if isinstance(p, (int, np.integer)) else self.vertex(p) for p in points)
        self.faces.append(tuple(int(i) for i in ids))
        return len(self.faces) - 1

    def register(self, key: Hashable, face: int, side: int) -> None:
        """Register a side under a pairing key; keys must collect exactly 2 sides."""
        self._pair_slots.setdefault(key, []).append((face, side))

    def pair(self, a: Side, b: Side) -> None:
        self._explicit.append((a, b))

    def side_of(self, face: int, a: int, b: int) -> int:
        """Side index of face running from vertex id a to b."""
        verts = self.faces[face]
        n = len(verts)
        for j in range(n):
            if verts[j] == a and verts[(j + 1) % n] == b:
                return j
        raise KeyError(f"face {face} has no side {a}->{b}")

    def build(self, infer: bool = False) -> Surface:
        """Assemble the surface.

        With ``infer`` the registered keys are ignored and pairing is inferred
        from coincident vertex pairs (only valid without doubled edges).
        """
        if infer:
            return build_surface(np.array(self.points), self.faces)
        pairs = list(self._explicit)
        for key, sides in self._pair_slots.items():
            if len(sides) == 1:
                continue  # boundary
            if len(sides) != 2:
                raise ValueError(f"pairing key {key!r} collected {len(sides)} sides")
            pairs.append((sides[0], sides[1]))
        return build_surface(np.array(self.points), self.faces, pairs)
