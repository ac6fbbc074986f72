"""Exception types shared across the geometry modules."""


class SurfaceError(Exception):
    """Base class for all surface construction and query errors."""


class NonManifoldEdge(SurfaceError):
    """A vertex pair carries more than two face sides and no explicit pairing."""


class PinchedVertex(SurfaceError):
    """The rotation walk at a vertex splits into more than one surface sheet."""


class InconsistentWinding(SurfaceError):
    """Two paired sides traverse their shared edge in the same direction."""


class DuplicateVertexPosition(SurfaceError):
    """Two distinct vertices occupy the same point in space."""


class OrphanVertex(SurfaceError):
    """A vertex is not used by any face."""


class NotClosed(SurfaceError):
    """Operation requires a closed surface but boundary sides exist."""


class NotConnected(SurfaceError):
    """Operation requires a connected surface."""


class BoundaryEdge(SurfaceError):
    """Operation requires an interior edge."""


class BoundaryVertex(SurfaceError):
    """Operation requires an interior vertex."""


class DegenerateFace(SurfaceError):
    """Face has (near) zero area."""


class AdjacentRemovedFaces(SurfaceError):
    """Two faces selected for removal share an edge."""


class BadDepth(SurfaceError):
    """Truncation depth outside (0, 1/2)."""


class NonUniformVertex(SurfaceError):
    """Truncation requires the same corner configuration at every vertex."""


class SizeMismatch(SurfaceError):
    """Faces to be glued have different sizes."""


class AlignmentNotRigid(SurfaceError):
    """Requested gluing alignment is not realizable by a rigid motion."""


class NotBoundary(SurfaceError):
    """Fin attachment requires rim sides that are free (or mutually paired)."""


class NotCoincident(SurfaceError):
    """Fin attachment requires two geometrically coincident rim sides."""


class OverlapViolation(SurfaceError):
    """Replicated copies overlap on faces instead of meeting at seams."""


class SeamMismatch(SurfaceError):
    """Replicated copies do not meet cleanly along coincident boundary sides."""


class EmptyInterior(SurfaceError):
    """Patch analysis requires at least one interior vertex."""


class NotRegular(SurfaceError):
    """Classification requires a regular report (single surface, regular faces, {N,M})."""


class BadN(SurfaceError):
    """Prism/antiprism require n >= 3."""


class UnknownEntry(KeyError):
    """Catalog id not recognized."""
