"""Floating-point measurements on surfaces: regularity, angles, vertex figures."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

import numpy as np

from .errors import BoundaryEdge, BoundaryVertex, DegenerateFace
from .surface import EdgeRecord, Side, Surface, vertex_rotation

ANGLE_TOL_DEG = 1e-6          # comparison tolerance after quantization
LENGTH_TOL = 1e-9


class CongruenceClass(Enum):
    IDENTICAL = "Identical"
    MIRROR = "Mirror"
    DISTINCT = "Distinct"


@dataclass(frozen=True)
class VertexFigure:
    """Cyclic sequence of (face size, corner angle, dihedral to next face).

    The walk direction is induced by the surface orientation (always crossing
    the side that leaves the vertex in the face's winding), so reversal is
    meaningful: mirror-image vertices produce reversed sequences.
    """

    entries: Tuple[Tuple[int, float, float], ...]
    sense: int = 1

    def __len__(self) -> int:
        return len(self.entries)

    def angle_sum(self) -> float:
        return sum(e[1] for e in self.entries)


def regular_corner_degrees(n: int) -> Fraction:
    """Exact interior corner angle of a regular n-gon, in degrees."""
    return Fraction((n - 2) * 180, n)


def _vector_angle(a: np.ndarray, b: np.ndarray) -> float:
    """Angle between vectors in degrees; atan2 form stays exact near 0 and 180."""
    cross = np.linalg.norm(np.cross(a, b))
    dot = float(np.dot(a, b))
    return math.degrees(math.atan2(cross, dot))


def _corner_angle(s: Surface, corner: Side) -> float:
    f, i = corner
    face = s.faces[f]
    n = len(face)
    v = s.vertices[face[i]]
    p = s.vertices[face[(i - 1) % n]]
    q = s.vertices[face[(i + 1) % n]]
    return _vector_angle(p - v, q - v)


def _in_face_perpendicular(s: Surface, side: Side) -> np.ndarray:
    """Unit vector perpendicular to the side's edge, in the face plane, pointing into the face."""
    f, _ = side
    a, b = s.side_vertices(side)
    pa = s.vertices[a]
    pb = s.vertices[b]
    u = pb - pa
    u = u / np.linalg.norm(u)
    centroid = s.face_points(f).mean(axis=0)
    w = centroid - pa
    w = w - np.dot(w, u) * u
    norm = np.linalg.norm(w)
    if norm < 1e-12:
        raise DegenerateFace(f"face {f} collapses onto side {side}")
    return w / norm


def side_dihedral(s: Surface, side: Side) -> float:
    """Dihedral angle in degrees at the edge carried by ``side`` (must be paired)."""
    partner = s.pairings.get(side)
    if partner is None:
        raise BoundaryEdge(f"side {side} is a boundary side")
    w1 = _in_face_perpendicular(s, side)
    w2 = _in_face_perpendicular(s, partner)
    return _vector_angle(w1, w2)


def dihedral_angle(s: Surface, e: EdgeRecord) -> float:
    """Unsigned dihedral in [0, 180]: 0 back-to-back, 90 cube edge, 180 coplanar."""
    return side_dihedral(s, e.sides[0])


def face_regularity(s: Surface, f: int, tol: float = LENGTH_TOL):
    """Measure one face: returns (is_planar, is_regular, n, side_length)."""
    pts = s.face_points(f)
    n = len(pts)
    centroid = pts.mean(axis=0)
    rel = pts - centroid
    # zero area check via the polygon's Newell normal
    normal = np.zeros(3)
    for i in range(n):
        a = rel[i]
        b = rel[(i + 1) % n]
        normal += np.cross(a, b)
    area2 = np.linalg.norm(normal)
    scale = max(1.0, float(np.abs(rel).max()))
    if area2 < 1e-12 * scale * scale:
        raise DegenerateFace(f"face {f} has zero area")
    normal = normal / area2
    planar_dev = float(np.abs(rel @ normal).max())
    is_planar = planar_dev <= tol * scale

    sides = np.linalg.norm(pts - np.roll(pts, -1, axis=0), axis=1)
    side_length = float(sides.mean())
    sides_equal = float(np.abs(sides - side_length).max()) <= tol * max(1.0, side_length)
    angles = [_corner_angle(s, (f, i)) for i in range(n)]
    mean_angle = sum(angles) / n
    angles_equal = max(abs(a - mean_angle) for a in angles) <= math.degrees(tol) + ANGLE_TOL_DEG

    is_regular = bool(is_planar and sides_equal and angles_equal)
    return is_planar, is_regular, n, side_length


def vertex_angle_sum(s: Surface, v: int) -> float:
    """Sum of face corner angles around an interior vertex, in degrees."""
    walk = vertex_rotation(s, v)
    if not walk.closed:
        raise BoundaryVertex(f"vertex {v} lies on the boundary")
    return sum(_corner_angle(s, c) for c in walk.corners)


def vertex_figure(s: Surface, v: int) -> VertexFigure:
    """Vertex figure at an interior vertex, canonically rotated."""
    walk = vertex_rotation(s, v)
    if not walk.closed:
        raise BoundaryVertex(f"vertex {v} lies on the boundary")
    entries = []
    for f, i in walk.corners:
        size = s.face_size(f)
        corner = _corner_angle(s, (f, i))
        dihedral = side_dihedral(s, (f, i))  # edge crossed toward the next corner
        entries.append((size, corner, dihedral))
    entries = _canonical_rotation(entries)
    return VertexFigure(tuple(entries), sense=1)


def _quantize(entries) -> Tuple[Tuple[int, float, float], ...]:
    return tuple((n, round(c, 6), round(d, 6)) for n, c, d in entries)


def _canonical_rotation(entries):
    q = _quantize(entries)
    m = len(entries)
    best = min(range(m), key=lambda k: q[k:] + q[:k])
    return entries[best:] + entries[:best]


def _reversed_entries(entries):
    """Reverse the cyclic walk; dihedrals re-attach to the new successor."""
    m = len(entries)
    return [(entries[(m - 1 - j) % m][0],
             entries[(m - 1 - j) % m][1],
             entries[(m - 2 - j) % m][2]) for j in range(m)]


def congruent(a: VertexFigure, b: VertexFigure) -> CongruenceClass:
    """Identical under cyclic rotation, Mirror under reversal+rotation, else Distinct.

    A reflection-symmetric figure matches both ways; Identical wins.
    """
    if len(a) != len(b):
        return CongruenceClass.DISTINCT
    qa = _quantize(_canonical_rotation(list(a.entries)))
    qb = _quantize(_canonical_rotation(list(b.entries)))
    if qa == qb:
        return CongruenceClass.IDENTICAL
    qb_rev = _quantize(_canonical_rotation(_reversed_entries(list(b.entries))))
    if qa == qb_rev:
        return CongruenceClass.MIRROR
    return CongruenceClass.DISTINCT
