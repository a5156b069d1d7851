"""Labeled line/point arrangements and the operators Lambda_{m,n}, Psi_{m,n}."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .projective import ProjLine, ProjPoint
from .scalar import Field

LINES = "lines"
POINTS = "points"


@dataclass(frozen=True)
class Arrangement:
    """An ordered list of distinct lines or distinct points.

    ``labels`` defaults to ``0..m-1``; unlabeled operator outputs are sorted
    by canonical coordinates so that they are deterministic.
    """

    kind: str
    members: tuple
    field: Field
    labels: tuple = dc_field(default=None)

    def __post_init__(self):
        if self.kind not in (LINES, POINTS):
            raise ValueError(f"unknown arrangement kind {self.kind!r}")
        members = tuple(self.members)
        cls = ProjLine if self.kind == LINES else ProjPoint
        if any(type(m) is not cls for m in members):
            raise TypeError(f"{self.kind} arrangement holds a non-{cls.__name__}")
        if len(set(members)) != len(members):
            raise ValueError("arrangement members must be pairwise distinct")
        object.__setattr__(self, "members", members)
        labels = tuple(range(len(members))) if self.labels is None else tuple(self.labels)
        if len(labels) != len(members):
            raise ValueError("one label per member")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of_lines(cls, lines, field: Field | None = None, labels=None) -> "Arrangement":
        lines = tuple(lines)
        field = field or (lines[0].field if lines else Field.rationals())
        return cls(LINES, lines, field, labels)

    @classmethod
    def of_points(cls, points, field: Field | None = None, labels=None) -> "Arrangement":
        points = tuple(points)
        field = field or (points[0].field if points else Field.rationals())
        return cls(POINTS, points, field, labels)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def dual(self) -> "Arrangement":
        kind = POINTS if self.kind == LINES else LINES
        return Arrangement(kind, tuple(m.dual() for m in self.members), self.field, self.labels)

    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def union(self, other: "Arrangement", relabel: bool = True) -> "Arrangement":
        """Labeled union; the two arrangements must not share members."""
        if other.kind != self.kind:
            raise ValueError("cannot unite lines with points")
        members = self.members + other.members
        labels = None if relabel else self.labels + other.labels
        return Arrangement(self.kind, members, self.field, labels)

    def sorted(self) -> "Arrangement":
        return Arrangement(self.kind, tuple(sorted(self.members, key=lambda m: m.sort_key())), self.field)


LabeledArrangement = Arrangement
SingularityProfile = dict  # k -> number of k-fold points


def dualize_arrangement(arr: Arrangement) -> Arrangement:
    return arr.dual()


def _require(arr: Arrangement, kind: str):
    if arr.kind != kind:
        raise ValueError(f"expected a {kind} arrangement, got {arr.kind}")


def incidence_map(arr: Arrangement) -> dict:
    """Every pairwise meet of a line arrangement mapped to the set of its lines."""
    _require(arr, LINES)
    lines = arr.members
    through = defaultdict(set)
    for i, j in combinations(range(len(lines)), 2):
        p = ProjPoint(_cross(lines[i].coords, lines[j].coords))
        s = through[p]
        s.add(i)
        s.add(j)
    return through


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def singular_points(arr: Arrangement) -> list[tuple[ProjPoint, int]]:
    """All intersection points of a line arrangement with their multiplicities."""
    items = [(p, len(s)) for p, s in incidence_map(arr).items()]
    items.sort(key=lambda t: t[0].sort_key())
    return items


def points_of_multiplicity(arr: Arrangement, mset) -> Arrangement:
    """The points lying on exactly ``m`` lines of ``arr`` for some ``m`` in ``mset``."""
    mset = set(mset)
    pts = [p for p, m in singular_points(arr) if m in mset]
    return Arrangement(POINTS, tuple(pts), arr.field)


def rich_line_map(arr: Arrangement) -> dict:
    """Every line through two points of ``arr`` mapped to the set of its points."""
    _require(arr, POINTS)
    pts = arr.members
    on = defaultdict(set)
    for i, j in combinations(range(len(pts)), 2):
        l = ProjLine(_cross(pts[i].coords, pts[j].coords))
        s = on[l]
        s.add(i)
        s.add(j)
    return on


def rich_lines(arr: Arrangement, nset) -> Arrangement:
    """The lines containing exactly ``n`` points of ``arr`` for some ``n`` in ``nset``."""
    nset = set(nset)
    lines = [l for l, s in rich_line_map(arr).items() if len(s) in nset]
    lines.sort(key=lambda l: l.sort_key())
    return Arrangement(LINES, tuple(lines), arr.field)


def lambda_op(arr: Arrangement, mset, nset) -> Arrangement:
    """Lambda_{m,n}: the n-rich lines of the m-points (possibly empty)."""
    _require(arr, LINES)
    return rich_lines(points_of_multiplicity(arr, mset), nset)


def psi_op(arr: Arrangement, mset, nset) -> Arrangement:
    """Psi_{m,n} on point arrangements: the n-points of the union of m-rich lines."""
    _require(arr, POINTS)
    return points_of_multiplicity(rich_lines(arr, mset), nset)


def stats(arr: Arrangement) -> dict[int, int]:
    """The t_k profile ``{k: number of k-fold points}``."""
    counts: dict[int, int] = defaultdict(int)
    for _, m in singular_points(arr):
        counts[m] += 1
    return dict(sorted(counts.items()))


def pair_count_ok(arr: Arrangement, profile: dict[int, int] | None = None) -> bool:
    """Every pair of distinct lines meets exactly once: sum t_k C(k,2) = C(m,2)."""
    profile = stats(arr) if profile is None else profile
    return sum(t * comb(k, 2) for k, t in profile.items()) == comb(len(arr), 2)


def profile_to_json(profile: dict[int, int]) -> dict:
    return {f"t{k}": v for k, v in sorted(profile.items())}


def shared_members(arr: Arrangement, out: Arrangement) -> list:
    """Members of ``out`` already present in ``arr`` (expected empty for Lambda outputs)."""
    return sorted(out.as_set() & arr.as_set(), key=lambda m: m.sort_key())
