"""Planar uniform tessellation patches (finite windows, unit edges).

Each tiling is generated as a template: faces of one translational cell,
found by building the local polygon cluster and keeping faces whose centroid
falls in the fundamental parallelogram of the translation lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..meshbuild import MeshBuilder
from ..regularity import PatchContext
from ..surface import Surface

S3 = math.sqrt(3)

TILING_NAMES = (
    "4^4", "3^6", "6^3", "4.8.8", "3.12.12", "3.4.6.4",
    "3.6.3.6", "3^3.4^2", "3^2.4.3.4", "3^4.6", "4.6.12",
)


@dataclass(frozen=True)
class TilingSpec:
    name: str
    extent: int = 4

    def __post_init__(self):
        if self.name not in TILING_NAMES:
            raise ValueError(f"unknown tiling {self.name!r}")
        if self.extent < 1:
            raise ValueError("extent must be >= 1")


def _u(deg: float) -> np.ndarray:
    a = math.radians(deg)
    return np.array([math.cos(a), math.sin(a)])


def _rot(deg: float) -> np.ndarray:
    a = math.radians(deg)
    return np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]])


def chain_polygon(a, b, n: int) -> List[np.ndarray]:
    """Regular CCW n-gon whose first directed side is a -> b (unit edge)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    verts = [a, b]
    d = b - a
    turn = _rot(360.0 / n)
    for _ in range(n - 2):
        d = turn @ d
        verts.append(verts[-1] + d)
    return verts


def neighbor_polygon(face: Sequence[np.ndarray], edge_index: int, n: int) -> List[np.ndarray]:
    """Regular n-gon attached across the given edge of a CCW face."""
    a = face[edge_index]
    b = face[(edge_index + 1) % len(face)]
    return chain_polygon(b, a, n)


def _face_key(verts) -> frozenset:
    return frozenset(tuple(int(round(c * 1e9)) for c in v) for v in verts)


def _dedupe(faces: List[List[np.ndarray]]) -> List[List[np.ndarray]]:
    out = []
    seen = set()
    for f in faces:
        k = _face_key(f)
        if k not in seen:
            seen.add(k)
            out.append(f)
    return out


def _shoelace(f) -> float:
    x = np.array([v[0] for v in f])
    y = np.array([v[1] for v in f])
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _filter_cell(faces, a1, a2):
    """One representative per lattice orbit: translate centroids into the cell."""
    basis = np.column_stack([a1, a2])
    inv = np.linalg.inv(basis)
    kept = []
    for f in faces:
        if _shoelace(f) < 0:
            f = list(reversed(f))
        c = np.mean(f, axis=0)
        m = inv @ c
        shift = np.floor(m + 1e-9)
        off = basis @ shift
        kept.append([np.asarray(v) - off for v in f])
    return _dedupe(kept)


def _star_cluster(center_face, sector_faces, center, symmetry: int):
    """Face cluster from rotating a vertex star about a face center."""
    faces = [center_face] + list(sector_faces)
    out = []
    for k in range(symmetry):
        r = _rot(360.0 * k / symmetry)
        for f in faces:
            out.append([center + r @ (np.asarray(v) - center) for v in f])
    return _dedupe(out)


def _template(name: str):
    """(lattice a1, lattice a2, faces of one translational cell)."""
    if name == "4^4":
        sq = [np.array(p, float) for p in [(0, 0), (1, 0), (1, 1), (0, 1)]]
        return np.array([1.0, 0.0]), np.array([0.0, 1.0]), [sq]

    if name == "3^6":
        up = [np.array(p, float) for p in [(0, 0), (1, 0), (0.5, S3 / 2)]]
        dn = [np.array(p, float) for p in [(1, 0), (1.5, S3 / 2), (0.5, S3 / 2)]]
        return np.array([1.0, 0.0]), np.array([0.5, S3 / 2]), [up, dn]

    if name == "6^3":
        hexa = [_u(60 * k) for k in range(6)]
        return np.array([1.5, S3 / 2]), np.array([1.5, -S3 / 2]), [hexa]

    if name == "4.8.8":
        r8 = 1.0 / (2 * math.sin(math.pi / 8))
        octa = [r8 * _u(22.5 + 45 * k) for k in range(8)]
        faces = [octa]
        for k in range(8):
            nb = neighbor_polygon(octa, k, 4)
            # squares sit across the diagonal-normal edges
            mid = 0.5 * (octa[k] + octa[(k + 1) % 8])
            ang = math.degrees(math.atan2(mid[1], mid[0])) % 90
            if abs(ang - 45) < 1:
                faces.append(nb)
        c = 1 + math.sqrt(2)
        return np.array([c, 0.0]), np.array([0.0, c]), _filter_cell(_dedupe(faces), np.array([c, 0.0]), np.array([0.0, c]))

    if name == "3.12.12":
        r12 = 1.0 / (2 * math.sin(math.pi / 12))
        dod = [r12 * _u(15 + 30 * k) for k in range(12)]
        faces = [dod]
        for k in range(12):
            mid = 0.5 * (dod[k] + dod[(k + 1) % 12])
            ang = math.degrees(math.atan2(mid[1], mid[0])) % 60
            if abs(ang - 30) < 1:  # triangle edges face the 30+60k directions
                faces.append(neighbor_polygon(dod, k, 3))
        L = 2 + S3
        a1 = np.array([L, 0.0])
        a2 = L * _u(60)
        return a1, a2, _filter_cell(_dedupe(faces), a1, a2)

    if name == "3.4.6.4":
        hexa = [_u(60 * k) for k in range(6)]
        faces = [hexa]
        squares = []
        for k in range(6):
            sq = neighbor_polygon(hexa, k, 4)
            squares.append(sq)
            faces.append(sq)
        for sq in squares:
            faces.append(neighbor_polygon(sq, 1, 3))
            faces.append(neighbor_polygon(sq, 3, 3))
        L = 1 + S3
        a1 = L * _u(30)
        a2 = L * _u(-30)
        return a1, a2, _filter_cell(_dedupe(faces), a1, a2)

    if name == "3.6.3.6":
        hexa = [_u(60 * k) for k in range(6)]
        faces = [hexa]
        for k in range(6):
            faces.append(neighbor_polygon(hexa, k, 3))
        a1 = np.array([2.0, 0.0])
        a2 = np.array([1.0, S3])
        return a1, a2, _filter_cell(_dedupe(faces), a1, a2)

    if name == "3^3.4^2":
        sq = [np.array(p, float) for p in [(0, 0), (1, 0), (1, 1), (0, 1)]]
        up = [np.array(p, float) for p in [(0, 1), (1, 1), (0.5, 1 + S3 / 2)]]
        dn = [np.array(p, float) for p in [(1, 1), (1.5, 1 + S3 / 2), (0.5, 1 + S3 / 2)]]
        return np.array([1.0, 0.0]), np.array([0.5, 1 + S3 / 2]), [sq, up, dn]

    if name == "3^2.4.3.4":
        s1 = [np.array(p, float) for p in [(0, 0), (1, 0), (1, 1), (0, 1)]]
        t1 = [np.array(p, float) for p in [(0, 0), (0, 1), (-S3 / 2, 0.5)]]
        s2 = chain_polygon(np.array([0.0, 0.0]), np.array([-S3 / 2, 0.5]), 4)
        t2 = [np.array(p, float) for p in [(0, 0), (-0.5, -S3 / 2), (0.5, -S3 / 2)]]
        t3 = [np.array(p, float) for p in [(0, 0), (0.5, -S3 / 2), (1, 0)]]
        center = np.array([0.5, 0.5])
        cluster = _star_cluster(s1, [t1, s2, t2, t3], center, 4)
        h = (2 + S3) / 2
        a1 = np.array([h, -0.5])
        a2 = np.array([0.5, h])
        return a1, a2, _filter_cell(cluster, a1, a2)

    if name == "3^4.6":
        hexa = [np.array(p, float) for p in
                [(0, 0), (1, 0), (1.5, S3 / 2), (1, S3), (0, S3), (-0.5, S3 / 2)]]
        t1 = [np.array(p, float) for p in [(0, 0), (-0.5, S3 / 2), (-1, 0)]]
        t2 = [np.array(p, float) for p in [(-1, 0), (-0.5, -S3 / 2), (0, 0)]]
        t3 = [np.array(p, float) for p in [(0, 0), (-0.5, -S3 / 2), (0.5, -S3 / 2)]]
        t4 = [np.array(p, float) for p in [(0, 0), (0.5, -S3 / 2), (1, 0)]]
        center = np.array([0.5, S3 / 2])
        cluster = _star_cluster(hexa, [t1, t2, t3, t4], center, 6)
        a1 = np.array([2.5, S3 / 2])
        a2 = np.array([0.5, 1.5 * S3])
        return a1, a2, _filter_cell(cluster, a1, a2)

    if name == "4.6.12":
        dod = chain_polygon(np.array([0.0, 0.0]), np.array([1.0, 0.0]), 12)
        hexa = chain_polygon(np.array([0.0, 0.0]), _u(150), 6)
        sq = [np.array(p, float) for p in [(0, 0), (0, -1), (1, -1), (1, 0)]]
        center = np.mean(dod, axis=0)
        cluster = _star_cluster(dod, [hexa, sq], center, 6)
        L = 3 + S3
        a1 = L * _u(30)
        a2 = L * _u(-30)
        return a1, a2, _filter_cell(cluster, a1, a2)

    raise ValueError(f"unknown tiling {name!r}")


_TEMPLATE_CACHE: Dict[str, tuple] = {}


def tiling_template(name: str):
    if name not in _TEMPLATE_CACHE:
        _TEMPLATE_CACHE[name] = _template(name)
    return _TEMPLATE_CACHE[name]


def tiling_faces(spec: TilingSpec) -> List[List[np.ndarray]]:
    """2D polygons of an extent x extent window, pruned to one edge-connected piece.

    A window can orphan cells that touch the rest only at vertices; the
    infinite tiling is connected, so those are dropped as window artifacts.
    """
    a1, a2, cell = tiling_template(spec.name)
    out = []
    for i in range(spec.extent):
        for j in range(spec.extent):
            off = i * a1 + j * a2
            for f in cell:
                out.append([v + off for v in f])

    def vkey(v):
        return (int(round(v[0] * 1e9)), int(round(v[1] * 1e9)))

    edge_cells: Dict[frozenset, List[int]] = {}
    for ci, f in enumerate(out):
        for k in range(len(f)):
            ekey = frozenset((vkey(f[k]), vkey(f[(k + 1) % len(f)])))
            edge_cells.setdefault(ekey, []).append(ci)
    adj: Dict[int, set] = {ci: set() for ci in range(len(out))}
    for cells in edge_cells.values():
        for a in cells:
            for b in cells:
                if a != b:
                    adj[a].add(b)
    best: List[int] = []
    seen = set()
    for start in range(len(out)):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            cur = stack.pop()
            for nb in adj[cur]:
                if nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    stack.append(nb)
        if len(comp) > len(best):
            best = comp
    return [out[ci] for ci in sorted(best)]


def tessellation_patch(spec: TilingSpec) -> Tuple[Surface, PatchContext]:
    """Planar patch with unit edges; interior vertices have closed rotations."""
    mb = MeshBuilder()
    for poly in tiling_faces(spec):
        mb.face([(v[0], v[1], 0.0) for v in poly])
    surf = mb.build(infer=True)
    return surf, PatchContext.from_closed_rotations(surf)
