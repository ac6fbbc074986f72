"""Exact seed solids: Platonic, required Archimedean/Johnson, prisms, antiprisms.

All outputs have unit edge length and regular faces to ~1e-15; coordinates
come from algebraic constants evaluated in double precision (the snub twist
is the root of its defining equations, found by a fixed, deterministic
Newton iteration).
"""

from __future__ import annotations

import math
from typing import Dict, List, Tuple

import numpy as np
from scipy.spatial import ConvexHull

from ..errors import BadN
from ..operators import regular_truncation_depth, truncate
from ..surface import Surface, build_surface

PHI = (1 + math.sqrt(5)) / 2


def convex_surface(points) -> Surface:
    """Surface of the convex hull: coplanar simplices merged, faces wound outward."""
    points = np.asarray(points, dtype=float)
    hull = ConvexHull(points)
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for eq, simplex in zip(hull.equations, hull.simplices):
        key = tuple(int(round(c * 1e8)) for c in eq)
        groups.setdefault(key, []).extend(int(i) for i in simplex)
    faces = []
    for key, idx in groups.items():
        ring = sorted(set(idx))
        normal = np.array(key[:3], dtype=float) * 1e-8
        normal /= np.linalg.norm(normal)
        centroid = points[ring].mean(axis=0)
        e1 = points[ring[0]] - centroid
        e1 -= np.dot(e1, normal) * normal
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        ang = [math.atan2(float(np.dot(points[i] - centroid, e2)),
                          float(np.dot(points[i] - centroid, e1))) for i in ring]
        faces.append(tuple(v for _, v in sorted(zip(ang, ring))))
    return build_surface(points, faces)


def _scaled(points, edge: float) -> np.ndarray:
    return np.asarray(points, dtype=float) / edge


PLATONIC_KINDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def platonic(kind: str) -> Surface:
    """The five regular solids, unit edge."""
    if kind == "tetrahedron":
        pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        return convex_surface(_scaled(pts, 2 * math.sqrt(2)))
    if kind == "cube":
        pts = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
        return convex_surface(_scaled(pts, 2))
    if kind == "octahedron":
        pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
        return convex_surface(_scaled(pts, math.sqrt(2)))
    if kind == "dodecahedron":
        pts = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
        for a in (-1 / PHI, 1 / PHI):
            for b in (-PHI, PHI):
                pts += [(0, a, b), (a, b, 0), (b, 0, a)]
        return convex_surface(_scaled(pts, 2 / PHI))
    if kind == "icosahedron":
        pts = []
        for a in (-1, 1):
            for b in (-PHI, PHI):
                pts += [(0, a, b), (a, b, 0), (b, 0, a)]
        return convex_surface(_scaled(pts, 2))
    raise ValueError(f"unknown platonic solid {kind!r}")


def _rhombicuboctahedron_points() -> np.ndarray:
    c = 1 + math.sqrt(2)
    pts = []
    for x in (-1, 1):
        for y in (-1, 1):
            for z in (-c, c):
                pts += [(x, y, z), (x, z, y), (z, x, y)]
    return _scaled(pts, 2)


def _pseudo_rhombicuboctahedron_points() -> np.ndarray:
    pts = _rhombicuboctahedron_points()
    top = pts[:, 2] > 0.6  # the four cap vertices at z = (1+sqrt(2))/2
    cap = pts[np.logical_and(top, np.abs(pts[:, 2]) > 1.0)]
    # rotate the top cap square by 45 degrees about z
    c = math.cos(math.pi / 4)
    s = math.sin(math.pi / 4)
    rot = np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]])
    out = []
    zmax = pts[:, 2].max()
    for p in pts:
        if abs(p[2] - zmax) < 1e-12:
            out.append(rot @ p)
        else:
            out.append(p)
    return np.array(out)


def _tribonacci() -> float:
    s33 = 3 * math.sqrt(33)
    return (1 + (19 + s33) ** (1 / 3) + (19 - s33) ** (1 / 3)) / 3


def _snub_cube_points(right: bool) -> np.ndarray:
    xi = _tribonacci()
    base = (1.0, 1.0 / xi, xi)
    pts = []
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    for pi, perm in enumerate(perms):
        even_perm = pi < 3
        for sx in (-1, 1):
            for sy in (-1, 1):
                for sz in (-1, 1):
                    signs = (sx, sy, sz)
                    minus = sum(1 for s in signs if s < 0)
                    want_even_minus = even_perm if right else not even_perm
                    if (minus % 2 == 0) == want_even_minus:
                        p = tuple(signs[k] * base[perm[k]] for k in range(3))
                        pts.append(p)
    pts = np.array(pts)
    d = np.linalg.norm(pts[0] - pts, axis=1)
    edge = np.min(d[d > 1e-9])
    return pts / edge


def _snub_twist_solve(seed: Surface):
    """Twist angle and face distance for the snub of a regular seed.

    Place a unit-edge regular n-gon in each face plane, rotated by theta
    about the face axis; solve |A-D| = |A-C| = 1 (the two independent
    cross-face distances) with Newton steps from a fixed start.
    """
    n = seed.face_size(0)
    r = 1.0 / (2.0 * math.sin(math.pi / n))

    face_frames = []
    for f in range(seed.n_faces):
        pts = seed.face_points(f)
        c = pts.mean(axis=0)
        normal = c / np.linalg.norm(c)  # seed centered at origin
        e1 = pts[0] - c
        e1 -= np.dot(e1, normal) * normal
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        face_frames.append((c / np.linalg.norm(c), np.linalg.norm(c), e1, e2,
                            [math.atan2(float(np.dot(p - c, e2)), float(np.dot(p - c, e1)))
                             for p in pts]))

    f0 = 0
    partner = seed.pairings[(f0, 0)]
    g0 = partner[0]

    def corners(f, d, theta):
        axis, _, e1, e2, angs = face_frames[f]
        return [d * axis + r * (math.cos(a + theta) * e1 + math.sin(a + theta) * e2)
                for a in angs]

    def residual(x):
        d, theta = x
        qf = corners(f0, d, theta)
        qg = corners(g0, d, theta)
        jq = 0                      # side (f0, 0) runs v0 -> v1
        m = partner[1]
        a = qf[jq]
        b = qf[(jq + 1) % n]
        cc = qg[m]                  # matches v1
        dd = qg[(m + 1) % n]        # matches v0
        return np.array([np.linalg.norm(a - dd) - 1.0, np.linalg.norm(a - cc) - 1.0])

    x = np.array([face_frames[0][1] * 1.3, 0.35])
    for _ in range(80):
        fx = residual(x)
        eps = 1e-7
        jac = np.zeros((2, 2))
        for k in range(2):
            xp = x.copy()
            xp[k] += eps
            jac[:, k] = (residual(xp) - fx) / eps
        x = x - np.linalg.solve(jac, fx)
    return x, r, face_frames, corners


def _snub_points(seed: Surface, right: bool) -> np.ndarray:
    (d, theta), r, frames, corners = _snub_twist_solve(seed)
    if not right:
        theta = -theta
    pts = []
    for f in range(seed.n_faces):
        pts.extend(corners(f, d, theta))
    return np.array(pts)


ARCHIMEDEAN_KINDS = (
    "rhombicuboctahedron", "pseudorhombicuboctahedron",
    "snub_cube_L", "snub_cube_R", "snub_dodecahedron_L", "snub_dodecahedron_R",
    "truncated_cube", "truncated_octahedron", "truncated_tetrahedron",
    "truncated_icosahedron", "truncated_dodecahedron",
)

_TRUNCATION_SEEDS = {
    "truncated_cube": ("cube", 90.0),
    "truncated_octahedron": ("octahedron", 60.0),
    "truncated_tetrahedron": ("tetrahedron", 60.0),
    "truncated_icosahedron": ("icosahedron", 60.0),
    "truncated_dodecahedron": ("dodecahedron", 108.0),
}


def archimedean(kind: str) -> Surface:
    """Unit-edge Archimedean (plus one Johnson) seeds used by the constructions."""
    if kind == "rhombicuboctahedron":
        return convex_surface(_rhombicuboctahedron_points())
    if kind == "pseudorhombicuboctahedron":
        return convex_surface(_pseudo_rhombicuboctahedron_points())
    if kind == "snub_cube_L":
        return convex_surface(_snub_cube_points(right=False))
    if kind == "snub_cube_R":
        return convex_surface(_snub_cube_points(right=True))
    if kind in ("snub_dodecahedron_L", "snub_dodecahedron_R"):
        pts = _snub_points(platonic("dodecahedron"), right=kind.endswith("R"))
        return convex_surface(pts)
    if kind in _TRUNCATION_SEEDS:
        seed_kind, corner = _TRUNCATION_SEEDS[kind]
        t = regular_truncation_depth(corner)
        trunc = truncate(platonic(seed_kind), t)
        return build_surface(np.asarray(trunc.vertices) / (1 - 2 * t), trunc.faces,
                             list(trunc.pairings.items()))
    raise ValueError(f"unknown archimedean kind {kind!r}")


def prism(n: int) -> Surface:
    """Unit-edge n-gonal prism (square sides)."""
    if n < 3:
        raise BadN("prism needs n >= 3")
    r = 1.0 / (2.0 * math.sin(math.pi / n))
    pts = []
    for z in (0.0, 1.0):
        for k in range(n):
            a = 2 * math.pi * k / n
            pts.append((r * math.cos(a), r * math.sin(a), z))
    bottom = tuple(range(n - 1, -1, -1))
    top = tuple(range(n, 2 * n))
    sides = [(k, (k + 1) % n, n + (k + 1) % n, n + k) for k in range(n)]
    return build_surface(np.array(pts), [bottom, top] + sides)


def antiprism(n: int) -> Surface:
    """Unit-edge n-gonal antiprism (equilateral triangle band)."""
    if n < 3:
        raise BadN("antiprism needs n >= 3")
    r = 1.0 / (2.0 * math.sin(math.pi / n))
    h2 = 1.0 - (2 * r * math.sin(math.pi / (2 * n))) ** 2
    h = math.sqrt(h2)
    pts = []
    for k in range(n):
        a = 2 * math.pi * k / n
        pts.append((r * math.cos(a), r * math.sin(a), 0.0))
    for k in range(n):
        a = 2 * math.pi * (k + 0.5) / n
        pts.append((r * math.cos(a), r * math.sin(a), h))
    bottom = tuple(range(n - 1, -1, -1))
    top = tuple(range(n, 2 * n))
    tris = []
    for k in range(n):
        tris.append((k, (k + 1) % n, n + k))
        tris.append(((k + 1) % n, n + (k + 1) % n, n + k))
    return build_surface(np.array(pts), [bottom, top] + tris)
