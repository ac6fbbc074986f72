"""Regularity analysis: is a surface (or patch interior) a regular envelope polyhedron?"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .errors import EmptyInterior, NotClosed, NotRegular, SurfaceError
from .metrics import (
    ANGLE_TOL_DEG,
    CongruenceClass,
    LENGTH_TOL,
    congruent,
    face_regularity,
    regular_corner_degrees,
    side_dihedral,
    vertex_angle_sum,
    vertex_figure,
)
from .surface import Surface, connected_components, euler_characteristic, genus as surface_genus


class NegativeDeficitVertex(SurfaceError):
    """Descartes' rule applies to surfaces whose every vertex has deficit >= 0."""


class VertexClass(Enum):
    IDENTICAL = "Identical"
    MIRROR_PAIRED = "MirrorPaired"
    HETEROGENEOUS = "Heterogeneous"


class Table1Symbol(Enum):
    PLUS = "+"          # finite polyhedron, no 0-degree dihedrals
    DIAMOND = "◇"       # finite envelope polyhedron
    BULLET = "•"        # infinite network / pseudopolyhedron, no 0-degree dihedrals
    CIRCLE = "○"        # infinite envelope polyhedron


@dataclass
class RegularityReport:
    single_surface: bool
    faces_regular: bool
    schlafli: Optional[Tuple[int, int]]            # (N, M) when uniform
    wbk_symbol: Optional[str]                      # "N^M"
    angle_sum: float
    angle_sum_exact: Optional[Fraction]
    curvature_class: str                           # "deficit" | "flat" | "excess"
    descartes_total_deficit: Optional[float]
    dihedral_spectrum: Tuple[float, ...]           # sorted, quantized to 1e-6 deg
    is_envelope: bool
    vertex_class: VertexClass
    euler: Optional[int]
    genus: Optional[int]
    finite: bool
    interior_count: int = 0


@dataclass(frozen=True)
class PatchContext:
    """Finite window onto an infinite structure: which vertices are checkable."""

    interior_vertices: frozenset

    @staticmethod
    def from_closed_rotations(s: Surface) -> "PatchContext":
        """Structural interior rule: vertices whose rotation forms one closed cycle."""
        interior = set()
        for v in range(s.n_vertices):
            comps = s.rotation_components(v)
            if len(comps) == 1 and comps[0].closed:
                interior.add(v)
        return PatchContext(frozenset(interior))


def _vertex_class_of(figures) -> VertexClass:
    ref = figures[0]
    saw_mirror = False
    for fig in figures[1:]:
        c = congruent(ref, fig)
        if c is CongruenceClass.DISTINCT:
            return VertexClass.HETEROGENEOUS
        if c is CongruenceClass.MIRROR:
            saw_mirror = True
    return VertexClass.MIRROR_PAIRED if saw_mirror else VertexClass.IDENTICAL


def analyze(s: Surface, mode: str | PatchContext = "closed",
            tol: float = LENGTH_TOL) -> RegularityReport:
    """Full regularity analysis.

    ``mode`` is "closed" for finite surfaces or a PatchContext for windows
    onto infinite structures; in patch mode only interior vertices and their
    incident faces/edges are measured.
    """
    if isinstance(mode, PatchContext):
        interior = sorted(mode.interior_vertices)
        if not interior:
            raise EmptyInterior("patch has no interior vertices")
        finite = False
    elif mode == "closed":
        if not s.is_closed():
            raise NotClosed("closed-mode analysis requires a closed surface")
        interior = list(range(s.n_vertices))
        finite = True
    else:
        raise ValueError(f"unknown mode {mode!r}")

    single_surface = connected_components(s) == 1

    checked_faces = sorted({f for v in interior for (f, _) in s.corners_at(v)})
    faces_regular = True
    sizes = set()
    for f in checked_faces:
        _, regular, n, _ = face_regularity(s, f, tol)
        faces_regular &= regular
        sizes.add(n)

    figures = [vertex_figure(s, v) for v in interior]
    valences = {len(fig) for fig in figures}
    vclass = _vertex_class_of(figures)

    schlafli = None
    wbk = None
    if faces_regular and len(sizes) == 1 and len(valences) == 1 \
            and vclass is not VertexClass.HETEROGENEOUS:
        schlafli = (next(iter(sizes)), next(iter(valences)))
        wbk = f"{schlafli[0]}^{schlafli[1]}"

    angle_sum = vertex_angle_sum(s, interior[0])
    angle_sum_exact = None
    if schlafli is not None:
        n, m = schlafli
        exact = m * regular_corner_degrees(n)
        if abs(float(exact) - angle_sum) <= len(figures[0]) * ANGLE_TOL_DEG:
            angle_sum_exact = exact
            angle_sum = float(exact)

    ref_sum = angle_sum_exact if angle_sum_exact is not None else angle_sum
    if ref_sum < 360 - (0 if angle_sum_exact is not None else ANGLE_TOL_DEG):
        curvature = "deficit"
    elif ref_sum > 360 + (0 if angle_sum_exact is not None else ANGLE_TOL_DEG):
        curvature = "excess"
    else:
        curvature = "flat"

    # dihedral spectrum over edges incident to checked vertices
    interior_set = set(interior)
    seen = set()
    spectrum = []
    for v in interior:
        for corner in s.corners_at(v):
            partner = s.pairings.get(corner)
            if partner is None:
                continue
            key = frozenset((corner, partner))
            if key in seen:
                continue
            seen.add(key)
            spectrum.append(round(side_dihedral(s, corner), 6))
    spectrum.sort()
    is_envelope = bool(spectrum) and spectrum[0] < ANGLE_TOL_DEG

    euler = None
    gen = None
    descartes = None
    if finite:
        euler = euler_characteristic(s)
        if single_surface:
            gen = surface_genus(s)
        try:
            descartes = float(descartes_check(s, tol))
        except (NegativeDeficitVertex, SurfaceError):
            descartes = None

    return RegularityReport(
        single_surface=single_surface,
        faces_regular=faces_regular,
        schlafli=schlafli,
        wbk_symbol=wbk,
        angle_sum=angle_sum,
        angle_sum_exact=angle_sum_exact,
        curvature_class=curvature,
        descartes_total_deficit=descartes,
        dihedral_spectrum=tuple(spectrum),
        is_envelope=is_envelope,
        vertex_class=vclass,
        euler=euler,
        genus=gen,
        finite=finite,
        interior_count=len(interior),
    )


def classify(report: RegularityReport) -> Table1Symbol:
    """Map a report onto the four classification symbols."""
    if not (report.single_surface and report.faces_regular and report.schlafli):
        raise NotRegular("classification requires a single regular-faced {N,M} surface")
    if report.finite:
        return Table1Symbol.DIAMOND if report.is_envelope else Table1Symbol.PLUS
    return Table1Symbol.CIRCLE if report.is_envelope else Table1Symbol.BULLET


def descartes_check(s: Surface, tol: float = LENGTH_TOL) -> Fraction:
    """Total angle deficit of a closed surface, in exact degree arithmetic.

    Corner angles of regular faces contribute their exact rational values
    (N-2)*180/N; the measured angles only validate regularity.  Raises if
    any vertex carries an angle excess.
    """
    if not s.is_closed():
        raise NotClosed("Descartes' rule applies to closed surfaces")
    corner_exact: Dict[int, Fraction] = {}
    for f in range(s.n_faces):
        _, regular, n, _ = face_regularity(s, f, tol)
        if not regular:
            raise NotRegular(f"face {f} is not a regular polygon")
        corner_exact[f] = regular_corner_degrees(n)
    total = Fraction(0)
    for v in range(s.n_vertices):
        vertex_sum = Fraction(0)
        for f, _ in s.corners_at(v):
            vertex_sum += corner_exact[f]
        deficit = 360 - vertex_sum
        if deficit < 0:
            raise NegativeDeficitVertex(f"vertex {v} has angle excess {float(-deficit)}")
        total += deficit
    return total
