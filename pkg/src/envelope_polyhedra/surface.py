"""Combinatorial-geometric polygonal surfaces with explicit side pairings.

A surface is a set of embedded polygonal faces glued along directed sides.
Side ``(f, j)`` is the directed segment from the j-th to the (j+1)-th vertex
of face ``f`` (cyclically).  The gluing is a fixed-point-free involution on
sides ("pairings"); a side without a partner is a boundary side.  Distinct
faces and edges may be geometrically coincident (back to back), vertices
never are.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DuplicateVertexPosition,
    InconsistentWinding,
    NonManifoldEdge,
    NotClosed,
    NotConnected,
    OrphanVertex,
    PinchedVertex,
)

Side = Tuple[int, int]

#: absolute tolerance for coordinate coincidence, in unit-edge scale
POSITION_TOL = 1e-9


def position_key(point: Sequence[float], tol: float = POSITION_TOL) -> Tuple[int, int, int]:
    """Quantize a coordinate triple onto a tol-grid for coincidence tests."""
    return tuple(int(round(c / tol)) for c in point)


@dataclass(frozen=True)
class EdgeRecord:
    """One interior combinatorial edge: a pairing orbit of two sides.

    ``multiplicity_index`` distinguishes coincident (back-to-back) edges
    between the same vertex pair.
    """

    endpoints: Tuple[int, int]          # unordered, stored sorted
    sides: Tuple[Side, Side]
    multiplicity_index: int


@dataclass(frozen=True)
class RotationWalk:
    """The ant walk around one vertex: corners in rotation order."""

    corners: Tuple[Side, ...]           # (face, corner position) entries
    closed: bool


class Surface:
    """Immutable oriented polygonal surface, possibly with boundary.

    Do not call directly; use :func:`build_surface`, which validates all
    invariants.
    """

    def __init__(self, vertices: np.ndarray, faces: Tuple[Tuple[int, ...], ...],
                 pairings: Dict[Side, Side]):
        vertices = np.asarray(vertices, dtype=float)
        vertices.setflags(write=False)
        self.vertices = vertices
        self.faces = faces
        self.pairings = MappingProxyType(dict(pairings))
        self._corners_at: Dict[int, List[Side]] = {}
        for f, face in enumerate(faces):
            for i, v in enumerate(face):
                self._corners_at.setdefault(v, []).append((f, i))
        self._edges: Optional[Tuple[EdgeRecord, ...]] = None

    # -- basic queries ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def side_vertices(self, side: Side) -> Tuple[int, int]:
        f, j = side
        face = self.faces[f]
        return face[j], face[(j + 1) % len(face)]

    def all_sides(self) -> Iterable[Side]:
        for f, face in enumerate(self.faces):
            for j in range(len(face)):
                yield (f, j)

    def boundary_sides(self) -> List[Side]:
        return [s for s in self.all_sides() if s not in self.pairings]

    def is_closed(self) -> bool:
        return not self.boundary_sides()

    def corners_at(self, v: int) -> List[Side]:
        return list(self._corners_at.get(v, []))

    def face_points(self, f: int) -> np.ndarray:
        return self.vertices[list(self.faces[f])]

    def edges(self) -> Tuple[EdgeRecord, ...]:
        """Interior edges: one record per pairing orbit, multiplicity-indexed."""
        if self._edges is None:
            records = []
            seen = set()
            for s, t in sorted(self.pairings.items()):
                if s in seen:
                    continue
                seen.add(s)
                seen.add(t)
                a, b = self.side_vertices(s)
                records.append((tuple(sorted((a, b))), (s, t)))
            counter: Dict[Tuple[int, int], int] = {}
            out = []
            for endpoints, sides in sorted(records):
                k = counter.get(endpoints, 0)
                counter[endpoints] = k + 1
                out.append(EdgeRecord(endpoints, sides, k))
            self._edges = tuple(out)
        return self._edges

    # -- rotation walks --------------------------------------------------

    def _corner_next(self, corner: Side) -> Optional[Side]:
        """Step the ant forward: cross the side leaving the vertex in f's winding."""
        partner = self.pairings.get(corner)
        if partner is None:
            return None
        g, j = partner
        return (g, (j + 1) % len(self.faces[g]))

    def _corner_prev(self, corner: Side) -> Optional[Side]:
        f, i = corner
        in_side = (f, (i - 1) % len(self.faces[f]))
        partner = self.pairings.get(in_side)
        if partner is None:
            return None
        return partner  # (g, j): face g's corner at the same vertex

    def rotation_components(self, v: int) -> List[RotationWalk]:
        """All walk components among the corners at v (one for valid interior vertices)."""
        corners = self._corners_at.get(v, [])
        remaining = set(corners)
        components: List[RotationWalk] = []
        while remaining:
            start = min(remaining)
            chain = [start]
            closed = False
            cur = start
            while True:
                nxt = self._corner_next(cur)
                if nxt is None:
                    break
                if nxt == start:
                    closed = True
                    break
                chain.append(nxt)
                cur = nxt
            if not closed:
                cur = start
                while True:
                    prv = self._corner_prev(cur)
                    if prv is None:
                        break
                    chain.insert(0, prv)
                    cur = prv
            for c in chain:
                remaining.discard(c)
            components.append(RotationWalk(tuple(chain), closed))
        return components


def vertex_rotation(s: Surface, v: int) -> RotationWalk:
    """The ant walk around vertex v: one cycle (interior) or one open chain.

    Valid surfaces have a single walk component at every vertex except,
    for bordered patches, window-truncation boundary vertices; querying one
    of those raises PinchedVertex.
    """
    components = s.rotation_components(v)
    if not components:
        raise OrphanVertex(f"vertex {v} has no incident face")
    if len(components) > 1:
        raise PinchedVertex(f"vertex {v} has {len(components)} rotation components")
    return components[0]


def euler_characteristic(s: Surface) -> int:
    """F - E + V, counting each pairing orbit and each boundary side as one edge."""
    n_edges = len(s.edges()) + len(s.boundary_sides())
    return s.n_faces - n_edges + s.n_vertices


def connected_components(s: Surface) -> int:
    """Components of the face-adjacency graph (adjacency through pairings)."""
    if s.n_faces == 0:
        return 0
    adj: Dict[int, set] = {f: set() for f in range(s.n_faces)}
    for (f, _), (g, _) in s.pairings.items():
        adj[f].add(g)
        adj[g].add(f)
    seen = set()
    comps = 0
    for f in range(s.n_faces):
        if f in seen:
            continue
        comps += 1
        stack = [f]
        seen.add(f)
        while stack:
            cur = stack.pop()
            for g in adj[cur]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
    return comps


def genus(s: Surface) -> int:
    """(2 - chi) / 2 for a closed connected orientable surface."""
    if not s.is_closed():
        raise NotClosed("genus is defined for closed surfaces only")
    if connected_components(s) != 1:
        raise NotConnected("genus is defined for connected surfaces only")
    chi = euler_characteristic(s)
    if chi % 2 != 0:
        raise NotConnected(f"chi={chi} is odd; surface cannot be closed orientable")
    return (2 - chi) // 2


def _infer_pairings(vertices: np.ndarray, faces: Tuple[Tuple[int, ...], ...]) -> Dict[Side, Side]:
    """Match sides over the same vertex pair.  Only defined at multiplicity <= 2."""
    by_pair: Dict[Tuple[int, int], List[Side]] = {}
    directed: Dict[Side, Tuple[int, int]] = {}
    for f, face in enumerate(faces):
        n = len(face)
        for j in range(n):
            a, b = face[j], face[(j + 1) % n]
            directed[(f, j)] = (a, b)
            by_pair.setdefault(tuple(sorted((a, b))), []).append((f, j))
    pairings: Dict[Side, Side] = {}
    for pair, sides in by_pair.items():
        if len(sides) == 1:
            continue  # boundary
        if len(sides) > 2:
            raise NonManifoldEdge(
                f"vertex pair {pair} carries {len(sides)} sides; "
                "doubled structures need explicit pairings")
        s, t = sides
        if directed[s] == directed[t]:
            raise InconsistentWinding(f"sides {s} and {t} traverse {pair} in the same direction")
        pairings[s] = t
        pairings[t] = s
    return pairings


def build_surface(vertices, faces, explicit_pairings: Optional[Iterable[Tuple[Side, Side]]] = None,
                  ) -> Surface:
    """Validate and assemble a Surface.

    ``explicit_pairings`` is an iterable of side pairs; when omitted, pairing
    is inferred (each unordered vertex pair may then carry at most 2 sides).
    Construction fails rather than returning an invalid surface.
    """
    vertices = np.asarray(vertices, dtype=float)
    if vertices.ndim != 2 or vertices.shape[1] != 3:
        raise ValueError("vertices must be an (n, 3) array")
    nv = len(vertices)
    faces = tuple(tuple(int(i) for i in face) for face in faces)

    for f, face in enumerate(faces):
        if len(face) < 3:
            raise ValueError(f"face {f} has fewer than 3 vertices")
        if len(set(face)) != len(face):
            raise ValueError(f"face {f} repeats a vertex")
        for i in face:
            if not 0 <= i < nv:
                raise ValueError(f"face {f} references vertex {i} out of range")

    seen_pos: Dict[Tuple[int, int, int], int] = {}
    for v in range(nv):
        key = position_key(vertices[v])
        other = seen_pos.get(key)
        if other is not None:
            raise DuplicateVertexPosition(f"vertices {other} and {v} coincide")
        seen_pos[key] = v

    used = set()
    for face in faces:
        used.update(face)
    for v in range(nv):
        if v not in used:
            raise OrphanVertex(f"vertex {v} is not used by any face")

    if explicit_pairings is None:
        pairings = _infer_pairings(vertices, faces)
    else:
        pairings = {}
        sizes = [len(face) for face in faces]
        for s, t in explicit_pairings:
            s = (int(s[0]), int(s[1]))
            t = (int(t[0]), int(t[1]))
            for side in (s, t):
                f, j = side
                if not (0 <= f < len(faces) and 0 <= j < sizes[f]):
                    raise ValueError(f"pairing references invalid side {side}")
            if s == t:
                raise ValueError(f"side {s} paired with itself")
            if pairings.get(s) == t and pairings.get(t) == s:
                continue  # symmetric duplicate of an existing pair
            if s in pairings or t in pairings:
                raise NonManifoldEdge(f"side {s if s in pairings else t} paired twice")
            pairings[s] = t
            pairings[t] = s

    surf = Surface(vertices, faces, pairings)

    # paired sides must traverse the same vertex pair in opposite directions
    for s, t in pairings.items():
        a, b = surf.side_vertices(s)
        c, d = surf.side_vertices(t)
        if (a, b) == (d, c):
            continue
        if (a, b) == (c, d):
            raise InconsistentWinding(f"paired sides {s}, {t} run the same direction")
        raise ValueError(f"paired sides {s}, {t} join different vertex pairs")

    # the ant condition: a closed cycle at a vertex must be its only sheet
    # (on a closed surface every component is a cycle, so this enforces one
    # cycle per vertex; bordered windows may truncate a vertex star into
    # several open chains, which is a windowing artifact, not a pinch)
    for v in range(nv):
        components = surf.rotation_components(v)
        if len(components) > 1 and any(c.closed for c in components):
            raise PinchedVertex(f"vertex {v}: multiple surface sheets meet")
    return surf
