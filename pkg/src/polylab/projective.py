"""Points, lines and projective transformations of the exact projective plane."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateFrame, DegenerateInput
from .linalg import adjugate3, cross, det3, dot, matmul3, matvec3
from .scalar import Field, field_of, sort_key


def _canonical(coords):
    coords = tuple(coords)
    if len(coords) != 3:
        raise ValueError("projective coordinates need exactly three entries")
    for c in coords:
        if c != 0:
            inv = 1 / c
            return tuple(x * inv for x in coords)
    raise DegenerateInput("the zero vector is not a projective point")


class _Proj:
    """Shared behaviour of points and lines: a canonical nonzero triple."""

    __slots__ = ("coords", "_hash")

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = coords[0]
        object.__setattr__(self, "coords", _canonical(coords))
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.coords)))

    def __setattr__(self, name, value):
        raise AttributeError("projective objects are immutable")

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def field(self) -> Field:
        return field_of(self.coords[0])

    def sort_key(self):
        return tuple(sort_key(c) for c in self.coords)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"


class ProjPoint(_Proj):
    __slots__ = ()

    def dual(self) -> "ProjLine":
        return ProjLine(self.coords)


class ProjLine(_Proj):
    """The line ``a*x + b*y + c*z = 0`` stored as ``(a, b, c)``."""

    __slots__ = ()

    def dual(self) -> ProjPoint:
        return ProjPoint(self.coords)

    def contains(self, p: ProjPoint) -> bool:
        return dot(self.coords, p.coords) == 0


def dualize(x):
    """Swap a point and the line with the same coordinate triple."""
    return x.dual()


def incident(line: ProjLine, point: ProjPoint) -> bool:
    return dot(line.coords, point.coords) == 0


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise DegenerateInput(f"cannot join {p} with itself")
    return ProjLine(cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    if l == m:
        raise DegenerateInput(f"cannot meet {l} with itself")
    return ProjPoint(cross(l.coords, m.coords))


def collinear(p, q, r) -> bool:
    """Three points collinear (or, dually, three lines concurrent)."""
    return det3(p.coords, q.coords, r.coords) == 0


def point(*coords, field: Field | None = None) -> ProjPoint:
    """Convenience constructor coercing raw numbers into ``field``."""
    if len(coords) == 1:
        coords = coords[0]
    field = field or Field.rationals()
    return ProjPoint(tuple(field(c) for c in coords))


def line(*coords, field: Field | None = None) -> ProjLine:
    if len(coords) == 1:
        coords = coords[0]
    field = field or Field.rationals()
    return ProjLine(tuple(field(c) for c in coords))


@dataclass(frozen=True, eq=False)
class ProjTransform:
    """An element of PGL_3 acting on coordinate triples.

    On points the action is ``v -> M v``.  For line arrangements the same
    matrix is applied to the normal vectors, which is how realizations are
    normalized (the first four normals are sent to the standard frame).
    """

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.matrix)
        if det3(*rows) == 0:
            raise DegenerateInput("singular matrix")
        flat = [x for r in rows for x in r]
        lead = next(x for x in flat if x != 0)
        inv = 1 / lead
        object.__setattr__(self, "matrix", tuple(tuple(x * inv for x in r) for r in rows))

    @classmethod
    def identity(cls, field: Field) -> "ProjTransform":
        o, z = field.one, field.zero
        return cls(((o, z, z), (z, o, z), (z, z, o)))

    def __eq__(self, other):
        return isinstance(other, ProjTransform) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __call__(self, x):
        return type(x)(matvec3(self.matrix, x.coords))

    def apply_all(self, xs):
        return [self(x) for x in xs]

    def __matmul__(self, other: "ProjTransform") -> "ProjTransform":
        return ProjTransform(matmul3(self.matrix, other.matrix))

    def inverse(self) -> "ProjTransform":
        return ProjTransform(adjugate3(self.matrix))

    @property
    def field(self) -> Field:
        return field_of(self.matrix[0][0])

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in r) for r in self.matrix)
        return f"ProjTransform([{rows}])"


def standard_frame(field: Field):
    o, z = field.one, field.zero
    return (ProjPoint(o, z, z), ProjPoint(z, o, z), ProjPoint(z, z, o), ProjPoint(o, o, o))


def frame_map(p1, p2, p3, p4) -> ProjTransform:
    """The transform sending ``p1..p4`` to ``(1:0:0), (0:1:0), (0:0:1), (1:1:1)``.

    Accepts points or lines (their coordinate triples are used).
    """
    a, b, c, d = (x.coords for x in (p1, p2, p3, p4))
    if any(det3(*t) == 0 for t in ((a, b, c), (a, b, d), (a, c, d), (b, c, d))):
        raise DegenerateFrame("three of the four frame elements are dependent")
    cols = (a, b, c)
    m = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    # solve m @ lam = d by Cramer, then A = m diag(lam) sends e_i -> p_i, (1,1,1) -> p4
    det = det3(a, b, c)
    lam = (det3(d, b, c) / det, det3(a, d, c) / det, det3(a, b, d) / det)
    scaled = tuple(tuple(m[i][j] * lam[j] for j in range(3)) for i in range(3))
    return ProjTransform(scaled).inverse()


def frame_normalize(members):
    """Apply the frame map of the first four members to all of them."""
    members = list(members)
    g = frame_map(*members[:4])
    return [g(x) for x in members], g


def projectively_equivalent(a, b):
    """A transform ``g`` with ``g(a[i]) == b[i]`` for every label, or ``None``.

    Both arguments are sequences (or arrangements) of the same object kind
    whose first four members are in general position.
    """
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise ValueError("arrangements of different lengths")
    if len(a) < 4:
        raise ValueError("need at least four members")
    if any(type(x) is not type(y) for x, y in zip(a, b)):
        raise ValueError("arrangements of different kinds")
    na, ga = frame_normalize(a)
    nb, gb = frame_normalize(b)
    if na != nb:
        return None
    return gb.inverse() @ ga
