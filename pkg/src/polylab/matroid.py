"""Rank-3 matroids stored as non-basis triples, and the matroids M_n."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import gcd

from .arrangement import Arrangement
from .errors import NotAUnit
from .linalg import det3

UNEXPECTED = "unexpected-dependence"
MISSING = "missing-dependence"


@dataclass(frozen=True)
class Rank3Matroid:
    """Ground set ``1..m``; ``nonbases`` holds sorted 1-based triples."""

    m: int
    nonbases: frozenset = dc_field(default_factory=frozenset)

    def __post_init__(self):
        nb = frozenset(tuple(sorted(t)) for t in self.nonbases)
        for t in nb:
            if len(set(t)) != 3 or not all(1 <= a <= self.m for a in t):
                raise ValueError(f"bad non-basis {t} for ground set of size {self.m}")
        object.__setattr__(self, "nonbases", nb)

    def is_basis(self, triple) -> bool:
        return tuple(sorted(triple)) not in self.nonbases

    def bases(self):
        return [t for t in combinations(range(1, self.m + 1), 3) if t not in self.nonbases]

    def relabel(self, perm) -> "Rank3Matroid":
        """Image under the atom permutation ``a -> perm[a-1]``."""
        return Rank3Matroid(self.m, frozenset(tuple(sorted(perm[a - 1] for a in t)) for t in self.nonbases))

    def to_json(self) -> dict:
        return {"m": self.m, "nonbases": [list(t) for t in sorted(self.nonbases)]}

    @classmethod
    def from_json(cls, data: dict) -> "Rank3Matroid":
        return cls(int(data["m"]), frozenset(tuple(t) for t in data["nonbases"]))


def satisfies_basis_exchange(mat: Rank3Matroid) -> bool:
    """Brute-force check of the basis exchange axiom (small ground sets only)."""
    bases = mat.bases()
    if not bases:
        return False
    base_set = set(bases)
    for a in bases:
        sa = set(a)
        for b in bases:
            sb = set(b)
            for x in sa - sb:
                if not any(tuple(sorted((sa - {x}) | {y})) in base_set for y in sb - sa):
                    return False
    return True


def matroid_of_arrangement(arr: Arrangement) -> Rank3Matroid:
    """Triples of concurrent lines (or collinear points) become non-bases."""
    if len(arr) < 3:
        raise ValueError("need at least three members")
    coords = [m.coords for m in arr.members]
    nb = {(i + 1, j + 1, k + 1) for i, j, k in combinations(range(len(coords)), 3)
          if det3(coords[i], coords[j], coords[k]) == 0}
    return Rank3Matroid(len(coords), frozenset(nb))


def unprimed(n: int, i: int) -> int:
    """Atom of the residue ``i`` in the first copy of Z/nZ."""
    return i % n + 1


def primed(n: int, r: int) -> int:
    """Atom of the residue ``r'`` in the primed copy of Z/nZ."""
    return n + r % n + 1


def build_Mn(n: int) -> Rank3Matroid:
    """M_n: non-bases ``{i, j; r'}`` with ``i != j`` and ``i + j + r = 0 mod n``."""
    if n < 5:
        raise ValueError("M_n is defined for n >= 5")
    nb = set()
    for i, j in combinations(range(n), 2):
        r = (-i - j) % n
        nb.add(tuple(sorted((unprimed(n, i), unprimed(n, j), primed(n, r)))))
    return Rank3Matroid(2 * n, frozenset(nb))


@dataclass
class Report:
    ok: bool
    violations: list

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "violations": [{"triple": list(t), "kind": k} for t, k in self.violations]}


def verify_realization(arr: Arrangement, mat: Rank3Matroid) -> Report:
    """Compare every triple's determinant with the matroid's non-basis set."""
    if len(arr) != mat.m:
        raise ValueError(f"arrangement has {len(arr)} members, matroid has {mat.m} atoms")
    coords = [m.coords for m in arr.members]
    violations = []
    for i, j, k in combinations(range(len(coords)), 3):
        t = (i + 1, j + 1, k + 1)
        dependent = det3(coords[i], coords[j], coords[k]) == 0
        expected = t in mat.nonbases
        if dependent and not expected:
            violations.append((t, UNEXPECTED))
        elif expected and not dependent:
            violations.append((t, MISSING))
    return Report(not violations, violations)


def affine_relabel(n: int, a: int, b: int) -> tuple:
    """Permutation of the 2n atoms: ``i -> a i + b`` and ``r' -> (a r - 2b)'``.

    Returned as a tuple ``perm`` with ``perm[atom - 1]`` the image atom.
    """
    if gcd(a, n) != 1:
        raise NotAUnit(f"{a} is not a unit modulo {n}")
    perm = [0] * (2 * n)
    for i in range(n):
        perm[unprimed(n, i) - 1] = unprimed(n, a * i + b)
        perm[primed(n, i) - 1] = primed(n, a * i - 2 * b)
    return tuple(perm)


def relabel_arrangement(arr: Arrangement, perm) -> Arrangement:
    """Move the member at atom ``x`` to atom ``perm[x]``.

    If ``arr`` realizes ``M`` then the result realizes ``M.relabel(perm)``.
    """
    members = [None] * len(arr)
    for x, m in enumerate(arr.members):
        members[perm[x] - 1] = m
    return Arrangement(arr.kind, tuple(members), arr.field)
