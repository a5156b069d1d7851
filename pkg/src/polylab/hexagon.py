"""Six lines: the family A(p), the operator Lambda_{2|3}, lambda_{2|3}, mu and the symmetries."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement
from .constants import (HEXAGON_INDETERMINACY, HEXAGON_NORMALS, LAMBDA23, S1_PRIME, S2_PRIME,
                        S_PENTAGRAM, evaluate_triple)
from .errors import Degenerate, DegenerateInput, Indeterminate
from .linalg import cross
from .matroid import Rank3Matroid, build_Mn, matroid_of_arrangement, primed, unprimed
from .projective import ProjLine, ProjPoint, frame_normalize

# S_k collects the vertices p_{i,j} with i + j = k mod 6
S_SETS = tuple(tuple((i, j) for i, j in combinations(range(6), 2) if (i + j) % 6 == k) for k in range(6))


HexagonParam = ProjPoint


def hexagon_relabel() -> tuple:
    """Atom permutation matching the ``i + j = k`` convention of S_k with M_6 (``r' -> (-r)'``)."""
    n = 6
    perm = [0] * 12
    for i in range(n):
        perm[unprimed(n, i) - 1] = unprimed(n, i)
        perm[primed(n, i) - 1] = primed(n, -i)
    return tuple(perm)


def hexagon_matroid() -> Rank3Matroid:
    """M_6 with the primed block labeled as the family lists it."""
    return build_Mn(6).relabel(hexagon_relabel())


def _normals(p: ProjPoint):
    f = p.field
    o, z = f.one, f.zero
    frame = [(o, z, z), (z, o, z), (z, z, o), (o, o, o)]
    return frame + [evaluate_triple(col, p.coords) for col in HEXAGON_NORMALS]


def hexagon_family(p: ProjPoint, check: bool = True) -> Arrangement:
    """The twelve lines of ``A(p)``: first hexagon ``C0``, then ``C1 = Lambda_{2|3}(C0)``."""
    normals = _normals(p)
    if any(all(c == 0 for c in v) for v in normals):
        raise Degenerate(f"{p} makes a family normal vanish")
    try:
        arr = Arrangement.of_lines([ProjLine(v) for v in normals], p.field)
    except ValueError:
        raise Degenerate(f"{p} makes two family lines coincide") from None
    if check and matroid_of_arrangement(arr) != hexagon_matroid():
        raise Degenerate(f"{p} lies on a degeneracy locus of the hexagon family")
    return arr


def first_hexagon(p: ProjPoint) -> Arrangement:
    A = hexagon_family(p)
    return Arrangement.of_lines(A.members[:6], A.field)


def second_hexagon(p: ProjPoint) -> Arrangement:
    A = hexagon_family(p)
    return Arrangement.of_lines(A.members[6:], A.field)


@dataclass
class HexagonImage:
    """Output of Lambda_{2|3}: all produced lines, and the labeled hexagon when there are six."""

    lines: Arrangement
    labeled: Arrangement | None
    slots: tuple

    @property
    def is_hexagon(self) -> bool:
        return self.labeled is not None


def lambda23(C: Arrangement) -> HexagonImage:
    """For each ``k`` the union of lines through at least two vertices of ``S_k``."""
    if len(C) != 6:
        raise DegenerateInput("Lambda_{2|3} acts on six lines")
    L = [l.coords for l in C.members]
    vertex = {}
    for i, j in combinations(range(6), 2):
        v = cross(L[i], L[j])
        if all(c == 0 for c in v):
            raise DegenerateInput("repeated line in the hexagon")
        vertex[(i, j)] = ProjPoint(v)
    if len(set(vertex.values())) != 15:
        raise DegenerateInput("the fifteen vertices are not distinct")
    slots = []
    for S in S_SETS:
        pts = [vertex[ij] for ij in S]
        slot = []
        for a, b in combinations(pts, 2):
            l = ProjLine(cross(a.coords, b.coords))
            if l not in slot:
                slot.append(l)
        slots.append(tuple(slot))
    everything = []
    for slot in slots:
        for l in slot:
            if l not in everything:
                everything.append(l)
    lines = Arrangement.of_lines(everything, C.field)
    labeled = None
    if all(len(s) == 1 for s in slots) and len(everything) == 6:
        labeled = Arrangement.of_lines([s[0] for s in slots], C.field)
    return HexagonImage(lines, labeled, tuple(slots))


def mu_inverse(C0: Arrangement) -> ProjPoint:
    """Recover the family parameter from a hexagon (framed on its first four lines)."""
    normalized, _ = frame_normalize(C0.members[:6])
    n5, n6 = normalized[4].coords, normalized[5].coords
    if n5[2] == 0 or n6[0] == 0:
        raise Degenerate("mu needs n5[3] and n6[1] nonzero")
    u = n5[0] / n5[2]
    v = n6[1] / n6[0]
    if u == 1:
        raise Degenerate("mu is undefined when u = 1")
    one = u * 0 + 1
    if v == 1:
        raise Degenerate("mu is undefined when v = 1")
    return ProjPoint(u * (v - 1), v - one, u - one)


def lambda23_formula(p: ProjPoint) -> ProjPoint:
    vals = evaluate_triple(LAMBDA23, p.coords)
    if all(c == 0 for c in vals):
        raise Indeterminate(f"{p} is an indeterminacy point of lambda_2|3")
    return ProjPoint(vals)


def lambda23_geometric(p: ProjPoint) -> ProjPoint:
    """Parameter of ``C1 u C2`` with ``C2 = Lambda_{2|3}(C1)``, read off through mu."""
    C1 = second_hexagon(p)
    img = lambda23(C1)
    if not img.is_hexagon:
        raise Degenerate(f"Lambda_2|3 of the second hexagon at {p} is not a hexagon")
    return mu_inverse(C1)


def _map(exprs, name, p: ProjPoint) -> ProjPoint:
    vals = evaluate_triple(exprs, p.coords)
    if all(c == 0 for c in vals):
        raise Indeterminate(f"{p} is on the base locus of {name}")
    return ProjPoint(vals)


def s1p(p: ProjPoint) -> ProjPoint:
    return _map(S1_PRIME, "s1'", p)


def s2p(p: ProjPoint) -> ProjPoint:
    return _map(S2_PRIME, "s2'", p)


def s_pentagram(p: ProjPoint) -> ProjPoint:
    return _map(S_PENTAGRAM, "s", p)


def hexagon_symmetries(p: ProjPoint) -> dict:
    """``{"s1'": s1'(p), "s2'": s2'(p), "s": s(p)}``."""
    return {"s1'": s1p(p), "s2'": s2p(p), "s": s_pentagram(p)}


def indeterminacy_points(field) -> list:
    return [ProjPoint(tuple(field(c) for c in v)) for v in HEXAGON_INDETERMINACY]


def klein_group():
    """The four elements generated by ``s1'`` and ``s2'``, as callables."""
    return (lambda q: q, s1p, s2p, lambda q: s1p(s2p(q)))


def rotate(C: Arrangement, k: int) -> Arrangement:
    """Relabel so that label ``j`` carries the member previously labeled ``j + k``."""
    n = len(C)
    return Arrangement.of_lines([C[(j + k) % n] for j in range(n)], C.field)


def pentagram_parameter(p: ProjPoint) -> ProjPoint:
    """Family parameter of the pentagram image of ``C0(p)``, labels rotated by one step."""
    from .pentagon import pentagram
    return mu_inverse(rotate(pentagram(first_hexagon(p)), 1))
