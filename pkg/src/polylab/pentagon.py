"""Five lines: the operators Lambda^0, Lambda^+, Lambda^-, the pentagram map and lambda^0.

Pentagon labels run over ``1..5`` in the join tables below; in an
:class:`Arrangement` label ``j`` sits at index ``j - 1``.
"""
from __future__ import annotations

from itertools import combinations

from .arrangement import Arrangement
from .constants import LAMBDA0, LAMBDA0_NORMALS, evaluate, evaluate_triple
from .cubic import PlaneCubic
from .errors import BasePoint, Degenerate, DegenerateInput, DegeneratePentagon
from .linalg import cross, det3
from .projective import ProjLine, ProjPoint, frame_normalize
from .scalar import Field, field_of, sqrt_in_field

# l'_j is the join of p_{r,s} and p_{t,u}; r+s = t+u = 2j mod 5
LAMBDA0_JOINS = {1: ((3, 4), (2, 5)), 2: ((1, 3), (4, 5)), 3: ((1, 5), (2, 4)),
                 4: ((1, 2), (3, 5)), 5: ((1, 4), (2, 3))}
# r+s = t+u = -j mod 5
LAMBDA_PLUS_JOINS = {1: ((2, 3), (4, 5)), 2: ((1, 5), (3, 4)), 3: ((1, 2), (4, 5)),
                     4: ((1, 5), (2, 3)), 5: ((1, 2), (3, 4))}
LAMBDA_MINUS_JOINS = {1: ((2, 4), (3, 5)), 2: ((1, 4), (3, 5)), 3: ((1, 4), (2, 5)),
                      4: ((1, 3), (2, 5)), 5: ((1, 3), (2, 4))}


PentagonParam = ProjPoint


def _check_pentagon(C: Arrangement):
    if len(C) != 5:
        raise ValueError("a pentagon has five lines")
    normals = [l.coords for l in C.members]
    if any(det3(*(normals[i] for i in t)) == 0 for t in combinations(range(5), 3)):
        raise DegeneratePentagon("three lines of the pentagon are concurrent")


def _apply_joins(C: Arrangement, table) -> Arrangement:
    _check_pentagon(C)
    lines = C.members
    vertex = {}
    for i, j in combinations(range(1, 6), 2):
        vertex[(i, j)] = ProjPoint(cross(lines[i - 1].coords, lines[j - 1].coords))
    if len(set(vertex.values())) != 10:
        raise DegeneratePentagon("the ten vertices are not distinct")
    out = [ProjLine(cross(vertex[a].coords, vertex[b].coords)) for a, b in (table[j] for j in range(1, 6))]
    if len(set(out)) != 5:
        raise DegeneratePentagon("the image lines are not distinct")
    return Arrangement.of_lines(out, C.field)


def lambda0(C: Arrangement) -> Arrangement:
    return _apply_joins(C, LAMBDA0_JOINS)


def lambda_plus(C: Arrangement) -> Arrangement:
    return _apply_joins(C, LAMBDA_PLUS_JOINS)


def lambda_minus(C: Arrangement) -> Arrangement:
    return _apply_joins(C, LAMBDA_MINUS_JOINS)


def psi0(P: Arrangement) -> Arrangement:
    """Dual operator on labeled five-point arrangements."""
    return lambda0(P.dual()).dual()


def pentagram(C: Arrangement) -> Arrangement:
    """``l'_r`` joins ``l_r . l_{r+2}`` with ``l_{r+1} . l_{r+3}`` (indices mod n)."""
    n = len(C)
    if n < 5:
        raise DegenerateInput("the pentagram map needs at least five lines")
    L = [l.coords for l in C.members]
    out = []
    for r in range(n):
        a = cross(L[r], L[(r + 2) % n])
        b = cross(L[(r + 1) % n], L[(r + 3) % n])
        if all(c == 0 for c in a) or all(c == 0 for c in b):
            raise DegenerateInput(f"repeated line near label {r}")
        ab = cross(a, b)
        if all(c == 0 for c in ab):
            raise DegenerateInput(f"the two meets for label {r} coincide")
        out.append(ProjLine(ab))
    if len(set(out)) != n:
        raise DegenerateInput("the pentagram image has repeated lines")
    return Arrangement.of_lines(out, C.field)


def pentagon_family(w: ProjPoint) -> Arrangement:
    """``C0(w)``: the coordinate frame lines followed by the line with normal ``w``."""
    f = w.field
    o, z = f.one, f.zero
    lines = [ProjLine(o, z, z), ProjLine(z, o, z), ProjLine(z, z, o), ProjLine(o, o, o), w.dual()]
    try:
        C = Arrangement.of_lines(lines, f)
        _check_pentagon(C)
    except (ValueError, DegeneratePentagon):
        raise Degenerate(f"{w} lies on the degeneracy locus of the pentagon family") from None
    return C


def parameter_of(C: Arrangement) -> ProjPoint:
    """The family parameter of a pentagon: its fifth normal once the first four are framed."""
    normalized, _ = frame_normalize(C.members)
    return normalized[4].dual()


def lambda0_geometric(w: ProjPoint) -> ProjPoint:
    return parameter_of(lambda0(pentagon_family(w)))


def lambda0_normals(w: ProjPoint) -> Arrangement:
    """The five normals of ``Lambda^0(C0(w))`` from the closed-form normal matrix."""
    v = w.coords
    return Arrangement.of_lines([ProjLine(evaluate_triple(col, v)) for col in LAMBDA0_NORMALS], w.field)


def lambda0_formula(w: ProjPoint) -> ProjPoint:
    vals = evaluate_triple(LAMBDA0, w.coords)
    if all(c == 0 for c in vals):
        raise BasePoint(f"{w} is a base point of lambda^0")
    return ProjPoint(vals)


def base_points(field: Field) -> list:
    """The rational base points and, when 5 is a square in ``field``, the two golden ones."""
    pts = [ProjPoint(tuple(field(c) for c in v)) for v in
           ((0, 1, 0), (1, 1, 1), (0, 0, 1), (1, 0, 0), (1, 1, 0), (1, 0, 1))]
    try:
        r5 = sqrt_in_field(field, field(5))
    except Exception:
        return pts
    for s in (r5, -r5):
        pts.append(ProjPoint(s + 3, s + 1, field(2)))
    return pts


def pentagon_Ew(w: ProjPoint) -> PlaneCubic:
    """The cubic through the normals of ``C0(w)`` and ``Lambda^0(C0(w))``, for ``w = (a:b:1)``."""
    x, y, z = w.coords
    if z == 0:
        raise Degenerate("E_w needs w = (a:b:1)")
    a, b = x / z, y / z
    if a == 0 or b == 0 or b == 1:
        raise Degenerate("E_w is undefined for a = 0 or b in {0, 1}")
    zero = a * 0
    one = zero + 1
    d = b * b - b
    # x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
    return PlaneCubic((zero, one, -a, -a / b, (a * a * b - a - b * b + b) / d,
                       (a * b - a * a) / (b - 1), zero, (a * b - a * a) / d, (a * a - a * b) / d, zero))


def is_base_point(w: ProjPoint) -> bool:
    return all(evaluate(e, w.coords) == 0 for e in LAMBDA0)


def regular_pentagon_check(field: Field) -> list:
    """For each golden base point: number of lines of ``Lambda^0(C0(w))`` through their common point."""
    from .arrangement import singular_points
    out = []
    for w in base_points(field)[6:]:
        C1 = lambda0(pentagon_family(w))
        out.append(max(m for _, m in singular_points(C1)))
    return out


def ensure_field(w) -> Field:
    return field_of(w.coords[0])
