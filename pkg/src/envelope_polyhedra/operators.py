"""Construction operators: hollowing/puncturing, truncation, gluing, fins, replication."""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    AdjacentRemovedFaces,
    AlignmentNotRigid,
    BadDepth,
    NonUniformVertex,
    NotBoundary,
    NotClosed,
    NotCoincident,
    NotRegular,
    OrphanVertex,
    OverlapViolation,
    SeamMismatch,
    SizeMismatch,
)
from .metrics import _corner_angle, face_regularity
from .surface import POSITION_TOL, Side, Surface, build_surface


# ---------------------------------------------------------------------------
# doubling (hollow-and-puncture)
# ---------------------------------------------------------------------------

def _double(s: Surface, removed: Iterable[int], drop_orphans: bool):
    """Exterior+interior doubling of the kept faces of ``s``.

    Every kept face appears twice (interior copy reversed, identical
    coordinates).  A kept-kept edge doubles; a side facing a removed face
    folds onto its own interior copy (hole rim); a side on the window
    boundary is likewise folded shut (a seal, reported separately).
    Returns (surface, ext_face_ids, seal_vertex_ids).
    """
    removed = set(removed)
    for f in removed:
        if not 0 <= f < s.n_faces:
            raise ValueError(f"removed face {f} out of range")
    kept = [f for f in range(s.n_faces) if f not in removed]
    if not kept:
        raise ValueError("nothing kept")

    used = sorted({v for f in kept for v in s.faces[f]})
    orphaned = set(range(s.n_vertices)) - set(used)
    if orphaned and not drop_orphans:
        raise OrphanVertex(f"vertices {sorted(orphaned)} touch no kept face")
    vmap = {v: i for i, v in enumerate(used)}
    vertices = s.vertices[used]

    ext_id = {f: 2 * i for i, f in enumerate(kept)}
    faces: List[Tuple[int, ...]] = []
    for f in kept:
        face = tuple(vmap[v] for v in s.faces[f])
        faces.append(face)                       # exterior copy, index 2i
        faces.append(tuple(reversed(face)))      # interior copy, index 2i+1

    def ext_side(f: int, j: int) -> Side:
        return (ext_id[f], j)

    def int_side(f: int, j: int) -> Side:
        n = s.face_size(f)
        return (ext_id[f] + 1, (n - 2 - j) % n)

    pairs: List[Tuple[Side, Side]] = []
    seal_vertices: set = set()
    done = set()
    for f in kept:
        for j in range(s.face_size(f)):
            side = (f, j)
            if side in done:
                continue
            partner = s.pairings.get(side)
            if partner is not None and partner[0] in removed:
                partner = None  # hole rim
            elif partner is None:
                a, b = s.side_vertices(side)
                seal_vertices.update((vmap[a], vmap[b]))
            if partner is None:
                pairs.append((ext_side(f, j), int_side(f, j)))
                done.add(side)
            else:
                g, k = partner
                pairs.append((ext_side(f, j), ext_side(g, k)))
                pairs.append((int_side(f, j), int_side(g, k)))
                done.add(side)
                done.add(partner)
    return build_surface(vertices, faces, pairs), ext_id, seal_vertices


def hollow_and_puncture(s: Surface, remove: Iterable[int]) -> Surface:
    """Hollow a closed surface, puncturing it at the removed faces.

    Removed faces must be pairwise non-edge-adjacent and every vertex must
    keep at least one face.
    """
    if not s.is_closed():
        raise NotClosed("hollow_and_puncture needs a closed seed")
    removed = set(remove)
    for f in removed:
        for j in range(s.face_size(f)):
            partner = s.pairings.get((f, j))
            if partner is not None and partner[0] in removed and partner[0] != f:
                raise AdjacentRemovedFaces(f"removed faces {f} and {partner[0]} share an edge")
    out, _, _ = _double(s, removed, drop_orphans=False)
    return out


def double_punctured_patch(s: Surface, remove: Iterable[int] = ()):
    """Doubling for bordered windows onto infinite structures.

    Window-truncation boundary sides are folded shut (window seals) and
    vertices stranded by the removal are dropped.  Returns the doubled
    surface plus its interior set: vertices with a single closed rotation
    away from every seal.
    """
    from .regularity import PatchContext

    out, _, seals = _double(s, set(remove), drop_orphans=True)
    interior = set()
    for v in range(out.n_vertices):
        if v in seals:
            continue
        comps = out.rotation_components(v)
        if len(comps) == 1 and comps[0].closed:
            interior.add(v)
    return out, PatchContext(frozenset(interior))


# ---------------------------------------------------------------------------
# truncation
# ---------------------------------------------------------------------------

def regular_truncation_depth(corner_angle_deg: float) -> float:
    """Depth t making the cut chord equal the shortened edge: 1/(2+2 sin(theta/2))."""
    if not 0 < corner_angle_deg < 180:
        raise ValueError("corner angle must lie in (0, 180)")
    return 1.0 / (2.0 + 2.0 * math.sin(math.radians(corner_angle_deg) / 2.0))


def truncate(s: Surface, t: float) -> Surface:
    """Cut every corner at depth ``t`` along each edge.

    Each n-gon face becomes a 2n-gon; each vertex becomes a cut polygon.
    Requires a closed seed with regular faces and one corner angle per vertex
    (the Platonic solids, in this artifact).
    """
    if not 0 < t < 0.5:
        raise BadDepth(f"t={t} outside (0, 1/2)")
    if not s.is_closed():
        raise NotClosed("truncate needs a closed seed")
    for f in range(s.n_faces):
        _, regular, _, _ = face_regularity(s, f)
        if not regular:
            raise NotRegular(f"face {f} is not regular")
    for v in range(s.n_vertices):
        angles = [_corner_angle(s, c) for c in s.corners_at(v)]
        if max(angles) - min(angles) > 1e-9:
            raise NonUniformVertex(f"vertex {v} mixes corner angles")

    cut: Dict[Tuple[int, int], int] = {}
    points: List[np.ndarray] = []

    def cut_point(a: int, b: int) -> int:
        key = (a, b)
        idx = cut.get(key)
        if idx is None:
            idx = len(points)
            points.append(s.vertices[a] + t * (s.vertices[b] - s.vertices[a]))
            cut[key] = idx
        return idx

    faces: List[Tuple[int, ...]] = []
    for f in range(s.n_faces):
        ring = s.faces[f]
        n = len(ring)
        poly = []
        for j in range(n):
            a, b = ring[j], ring[(j + 1) % n]
            poly.append(cut_point(a, b))
            poly.append(cut_point(b, a))
        faces.append(tuple(poly))

    from .surface import vertex_rotation
    for v in range(s.n_vertices):
        walk = vertex_rotation(s, v)
        ring = []
        for corner in walk.corners:
            _, w = s.side_vertices(corner)  # out-edge endpoint
            ring.append(cut_point(v, w))
        faces.append(tuple(reversed(ring)))

    return build_surface(np.array(points), faces)


# ---------------------------------------------------------------------------
# rigid motions / assembly
# ---------------------------------------------------------------------------

def transform(s: Surface, rotation=None, translation=(0.0, 0.0, 0.0)) -> Surface:
    """Apply a rigid motion (proper rotation + translation)."""
    pts = np.asarray(s.vertices)
    if rotation is not None:
        rotation = np.asarray(rotation, dtype=float)
        if abs(np.linalg.det(rotation) - 1.0) > 1e-9:
            raise AlignmentNotRigid("rotation must be proper (det +1)")
        pts = pts @ rotation.T
    pts = pts + np.asarray(translation, dtype=float)
    return build_surface(pts, s.faces, list(s.pairings.items()))


def combine(surfaces: Sequence[Surface]) -> Tuple[Surface, List[Dict[int, int]], List[int]]:
    """Disjoint union with coordinate-merged vertices.

    Returns (surface, per-input vertex maps, per-input face offsets).
    """
    from .surface import position_key

    points: List[Tuple[float, ...]] = []
    index: Dict[Tuple[int, int, int], int] = {}
    vmaps: List[Dict[int, int]] = []
    foffs: List[int] = []
    faces: List[Tuple[int, ...]] = []
    pairs: List[Tuple[Side, Side]] = []
    for s in surfaces:
        vmap = {}
        for v in range(s.n_vertices):
            key = position_key(s.vertices[v])
            idx = index.get(key)
            if idx is None:
                idx = len(points)
                points.append(tuple(s.vertices[v]))
                index[key] = idx
            vmap[v] = idx
        off = len(faces)
        for face in s.faces:
            faces.append(tuple(vmap[v] for v in face))
        for a, b in s.pairings.items():
            if a < b:
                pairs.append(((a[0] + off, a[1]), (b[0] + off, b[1])))
        vmaps.append(vmap)
        foffs.append(off)
    return build_surface(np.array(points), faces, pairs), vmaps, foffs


def glue_faces(s: Surface, fa: int, fb: int) -> Surface:
    """Remove two coincident opposite-winding faces and cross-pair their surroundings."""
    A = s.faces[fa]
    B = s.faces[fb]
    if len(A) != len(B):
        raise SizeMismatch(f"faces {fa} ({len(A)}-gon) and {fb} ({len(B)}-gon)")
    if set(A) != set(B):
        raise AlignmentNotRigid("faces to glue must share their vertices")
    n = len(A)

    def side_index(face: Tuple[int, ...], a: int, b: int) -> int:
        for j in range(len(face)):
            if face[j] == a and face[(j + 1) % len(face)] == b:
                return j
        raise AlignmentNotRigid("faces to glue must traverse their vertices oppositely")

    new_pairs: Dict[Side, Side] = dict(s.pairings)

    def unlink(side: Side) -> Optional[Side]:
        partner = new_pairs.pop(side, None)
        if partner is not None:
            new_pairs.pop(partner, None)
        return partner

    for j in range(n):
        a, b = A[j], A[(j + 1) % n]
        m = side_index(B, b, a)
        pa = unlink((fa, j))
        pb = unlink((fb, m))
        if pa is not None and pa[0] in (fa, fb):
            raise AlignmentNotRigid("glued faces may not be paired to each other")
        if pb is not None and pb[0] in (fa, fb):
            raise AlignmentNotRigid("glued faces may not be paired to each other")
        if pa is not None and pb is not None:
            new_pairs[pa] = pb
            new_pairs[pb] = pa
        # a remaining lone partner stays boundary

    keep = [f for f in range(s.n_faces) if f not in (fa, fb)]
    fmap = {f: i for i, f in enumerate(keep)}
    faces = [s.faces[f] for f in keep]
    pairs = []
    for x, y in new_pairs.items():
        if x < y:
            pairs.append(((fmap[x[0]], x[1]), (fmap[y[0]], y[1])))
    return build_surface(np.asarray(s.vertices), faces, pairs)


def _kabsch(p: np.ndarray, q: np.ndarray):
    """Proper rigid motion (R, t) minimizing |R q + t - p|."""
    pc = p.mean(axis=0)
    qc = q.mean(axis=0)
    h = (q - qc).T @ (p - pc)
    u, _, vt = np.linalg.svd(h)
    d = np.sign(np.linalg.det(vt.T @ u.T))
    diag = np.diag([1.0, 1.0, d])
    r = vt.T @ diag @ u.T
    t = pc - r @ qc
    return r, t


def glue_back_to_back(a: Surface, fa: int, b: Surface, fb: int,
                      alignment: Optional[Sequence[Tuple[int, int]]] = None) -> Surface:
    """Glue two surfaces at congruent faces ``fa`` (of a) and ``fb`` (of b).

    ``alignment`` maps fa's boundary cycle onto fb's reversed cycle as
    (vertex-of-a, vertex-of-b) pairs; the implied rigid motion is applied to
    ``b``.  Without it, ``b`` must already be placed so the faces coincide.
    """
    if a.face_size(fa) != b.face_size(fb):
        raise SizeMismatch(f"{a.face_size(fa)}-gon vs {b.face_size(fb)}-gon")
    if alignment is not None:
        p = np.array([a.vertices[i] for i, _ in alignment])
        q = np.array([b.vertices[j] for _, j in alignment])
        r, t = _kabsch(p, q)
        if np.abs(q @ r.T + t - p).max() > 1e-8:
            raise AlignmentNotRigid("correspondence is not realizable by a rigid motion")
        b = transform(b, r, t)
    pa = a.face_points(fa)
    pb = b.face_points(fb)
    keys_a = {tuple(np.round(x / POSITION_TOL).astype(int)) for x in pa}
    keys_b = {tuple(np.round(x / POSITION_TOL).astype(int)) for x in pb}
    if keys_a != keys_b:
        raise AlignmentNotRigid("faces do not coincide after placement")
    union, vmaps, foffs = combine([a, b])
    return glue_faces(union, fa + foffs[0], fb + foffs[1])


# ---------------------------------------------------------------------------
# fins
# ---------------------------------------------------------------------------

def attach_fin(s: Surface, rim: Tuple[Side, Side], direction) -> Surface:
    """Erect two back-to-back unit squares on a coincident rim side pair.

    The rim sides must traverse the same vertex pair in opposite directions
    and be either boundary sides or paired with each other (a prism-layer
    back-to-back rim); the fin is inserted into that crossing.
    """
    s1, s2 = rim
    u, w = s.side_vertices(s1)
    w2, u2 = s.side_vertices(s2)
    if (u, w) != (u2, w2):
        if (u, w) == (w2, u2):
            raise NotCoincident("rim sides traverse the same direction; need opposite")
        raise NotCoincident("rim sides do not share their vertex pair")
    d = np.asarray(direction, dtype=float)
    edge = s.vertices[w] - s.vertices[u]
    if abs(float(np.dot(d, edge))) > 1e-9 * np.linalg.norm(edge) * np.linalg.norm(d):
        raise ValueError("fin direction must be perpendicular to the rim edge")
    d = d / np.linalg.norm(d)

    p1 = s.pairings.get(s1)
    p2 = s.pairings.get(s2)
    if p1 not in (None, s2) or p2 not in (None, s1):
        raise NotBoundary("rim sides must be boundary or mutually paired")

    pu, pw = s.vertices[u], s.vertices[w]
    points = np.vstack([s.vertices, pu + d, pw + d])
    iu, iw = s.n_vertices, s.n_vertices + 1
    f1 = len(s.faces)
    f2 = f1 + 1
    faces = list(s.faces) + [(u, w, iw, iu), (w, u, iu, iw)]
    pairs = [(x, y) for x, y in s.pairings.items() if x < y and {x, y} != {s1, s2}]
    pairs += [
        (s1, (f2, 0)), (s2, (f1, 0)),
        ((f1, 1), (f2, 3)), ((f1, 2), (f2, 2)), ((f1, 3), (f2, 1)),
    ]
    return build_surface(points, faces, pairs)


# ---------------------------------------------------------------------------
# replication
# ---------------------------------------------------------------------------

def replicate(s: Surface, lattice: Sequence[Sequence[float]], counts: Sequence[int]) -> Surface:
    """Instantiate translated copies and cross-pair coincident seam sides."""
    lattice = [np.asarray(v, dtype=float) for v in lattice]
    if len(lattice) != len(counts) or not lattice or len(lattice) > 3:
        raise ValueError("need 1-3 lattice vectors with matching counts")
    for c in counts:
        if c < 1:
            raise ValueError("counts must be >= 1")

    copies = []
    grids = np.stack(np.meshgrid(*[np.arange(c) for c in counts], indexing="ij"), axis=-1)
    for idx in grids.reshape(-1, len(counts)):
        offset = sum(int(k) * v for k, v in zip(idx, lattice))
        copies.append(transform(s, None, offset))
    union, vmaps, foffs = combine(copies)

    # overlapping copies would duplicate a face (same cycle, same winding)
    seen_cycles = {}
    for f, face in enumerate(union.faces):
        m = face.index(min(face))
        canon = face[m:] + face[:m]
        if canon in seen_cycles:
            raise OverlapViolation(f"faces {seen_cycles[canon]} and {f} coincide")
        seen_cycles[canon] = f

    copy_of = {}
    nf = s.n_faces
    for f in range(len(union.faces)):
        copy_of[f] = f // nf

    groups: Dict[Tuple[int, int], List[Side]] = {}
    for side in union.boundary_sides():
        a, b = union.side_vertices(side)
        groups.setdefault(tuple(sorted((a, b))), []).append(side)

    new_pairs = [(x, y) for x, y in union.pairings.items() if x < y]
    for pair_key, sides in groups.items():
        if len(sides) == 1:
            continue
        fwd = [x for x in sides if union.side_vertices(x) == (pair_key[0], pair_key[1])]
        rev = [x for x in sides if x not in fwd]
        if len(sides) == 2:
            if len(fwd) != 1 or len(rev) != 1:
                raise SeamMismatch(f"seam at {pair_key} has same-direction sides")
            new_pairs.append((fwd[0], rev[0]))
        elif len(sides) == 4 and len(fwd) == 2 and len(rev) == 2:
            # two valid matchings; the seam continues across copies, so prefer
            # partners from different copies (a fin runs into the next layer)
            a0, a1 = fwd
            b0, b1 = rev
            if copy_of[a0[0]] != copy_of[b0[0]] and copy_of[a1[0]] != copy_of[b1[0]]:
                new_pairs += [(a0, b0), (a1, b1)]
            elif copy_of[a0[0]] != copy_of[b1[0]] and copy_of[a1[0]] != copy_of[b0[0]]:
                new_pairs += [(a0, b1), (a1, b0)]
            else:
                raise SeamMismatch(f"seam at {pair_key} is ambiguous")
        else:
            raise SeamMismatch(f"seam at {pair_key} collects {len(sides)} sides")
    return build_surface(np.asarray(union.vertices), union.faces, new_pairs)
