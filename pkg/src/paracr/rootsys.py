"""Root systems of the simple complex Lie algebras in Bourbaki numbering.

Roots are integer coefficient vectors over the simple roots; every
computation is exact integer arithmetic.  Vertex indices are 1-based
throughout, matching the usual numbering of Dynkin diagram nodes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

Root = tuple[int, ...]

# Admitted ranks per family (low, high); high=None means unbounded.
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class InvalidAlgebraError(ValueError):
    """Raised for an unknown family or a rank outside the family's range."""


@dataclass(frozen=True, order=True)
class AlgebraType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_BOUNDS:
            raise InvalidAlgebraError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            span = f">= {lo}" if hi is None else f"in {lo}..{hi}"
            raise InvalidAlgebraError(
                f"rank {self.rank} invalid for family {self.family}: rank must be {span}"
            )

    @classmethod
    def parse(cls, token: str) -> "AlgebraType":
        token = token.strip()
        if len(token) < 2 or token[0] not in _RANK_BOUNDS or not token[1:].isdigit():
            raise InvalidAlgebraError(
                f"cannot parse algebra {token!r}; expected e.g. A3, D5, E6"
            )
        return cls(token[0], int(token[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(algebra: AlgebraType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix, entry [i][j] = <alpha_i, alpha_j-coroot>."""
    n = algebra.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i: int, j: int) -> None:  # 1-based single bond
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1

    fam = algebra.family
    if fam in ("A", "B", "C"):
        for i in range(1, n):
            link(i, i + 1)
        if fam == "B":  # alpha_n short
            a[n - 2][n - 1] = -2
        elif fam == "C":  # alpha_n long
            a[n - 1][n - 2] = -2
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for i, j in zip(chain, chain[1:]):
            link(i, j)
        link(2, 4)
    elif fam == "F":
        link(1, 2)
        link(2, 3)
        link(3, 4)
        a[1][2] = -2  # alpha_3, alpha_4 short
    else:  # G
        a[0][1] = -1
        a[1][0] = -3  # alpha_1 short, alpha_2 long
    return tuple(map(tuple, a))


def dynkin_edges(algebra: AlgebraType) -> frozenset[tuple[int, int]]:
    """Edges of the Dynkin diagram as 1-based pairs (i, j) with i < j."""
    a = cartan_matrix(algebra)
    n = algebra.rank
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0
    )


@dataclass(frozen=True)
class RootSystem:
    algebra: AlgebraType
    cartan_matrix: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    highest_root: Root
    marks: tuple[int, ...]
    _root_set: frozenset[Root] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if sum(r) > 0)

    def contains(self, v: Root) -> bool:
        return v in self._root_set


@lru_cache(maxsize=None)
def build_root_system(algebra: AlgebraType) -> RootSystem:
    """Generate all roots by closing the simple roots under simple reflections."""
    n = algebra.rank
    cm = cartan_matrix(algebra)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[Root] = set(simple)
    frontier: set[Root] = set(simple)
    while frontier:
        fresh: set[Root] = set()
        for beta in frontier:
            for j in range(n):
                pairing = sum(beta[i] * cm[i][j] for i in range(n))
                image = list(beta)
                image[j] -= pairing
                img = tuple(image)
                if img not in roots:
                    fresh.add(img)
        roots |= fresh
        frontier = fresh

    ordered = tuple(sorted(roots))
    positives = [r for r in ordered if sum(r) > 0]
    highest = max(positives, key=sum)
    if any(any(h < c for h, c in zip(highest, r)) for r in positives):
        raise AssertionError(f"no dominating highest root in {algebra}")
    return RootSystem(
        algebra=algebra,
        cartan_matrix=cm,
        roots=ordered,
        highest_root=highest,
        marks=highest,
        _root_set=frozenset(ordered),
    )


def is_root(rs: RootSystem, v) -> bool:
    v = tuple(v)
    if len(v) != rs.rank:
        raise ValueError(f"vector length {len(v)} != rank {rs.rank}")
    return rs.contains(v)


def dynkin_marks(rs: RootSystem) -> tuple[int, ...]:
    """Coefficients of the maximal root over the simple roots."""
    return rs.marks


def add_roots(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def negate(a: Root) -> Root:
    return tuple(-x for x in a)
