"""Gradations of a simple Lie algebra induced by a label vector.

A label vector assigns a non-negative integer to every simple root; the
degree of a root is the label-weighted sum of its coefficients.  Degree
level sets, the depth, structural flags and the decomposition of the
degree-one space into irreducible degree-zero submodules are all derived
from the root system alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import Root, RootSystem, add_roots, dynkin_marks


@dataclass(frozen=True)
class Gradation:
    rs: RootSystem
    labels: tuple[int, ...]
    depth: int
    level_sets: dict[int, tuple[Root, ...]] = field(repr=False, compare=False)

    def degree(self, root: Root) -> int:
        return sum(k * d for k, d in zip(root, self.labels))

    @property
    def pi1(self) -> frozenset[int]:
        """1-based vertices with label one."""
        return frozenset(i + 1 for i, d in enumerate(self.labels) if d == 1)


def make_gradation(rs: RootSystem, labels) -> Gradation:
    labels = tuple(labels)
    if len(labels) != rs.rank:
        raise ValueError(f"label vector length {len(labels)} != rank {rs.rank}")
    if any(d < 0 for d in labels):
        raise ValueError("labels must be non-negative")
    levels: dict[int, list[Root]] = {}
    for root in rs.roots:
        deg = sum(k * d for k, d in zip(root, labels))
        levels.setdefault(deg, []).append(root)
    level_sets = {deg: tuple(roots) for deg, roots in sorted(levels.items())}
    depth = max(abs(deg) for deg in level_sets)
    return Gradation(rs=rs, labels=labels, depth=depth, level_sets=level_sets)


def labels_for(rs: RootSystem, pi1) -> tuple[int, ...]:
    """0/1 label vector assigning one to the 1-based vertices in pi1."""
    pi1 = frozenset(pi1)
    bad = pi1 - set(range(1, rs.rank + 1))
    if bad:
        raise ValueError(f"vertex indices out of range 1..{rs.rank}: {sorted(bad)}")
    return tuple(1 if i + 1 in pi1 else 0 for i in range(rs.rank))


def depth_by_marks(rs: RootSystem, pi1) -> int:
    """Depth of the fundamental gradation of pi1 as a sum of Dynkin marks."""
    pi1 = frozenset(pi1)
    if not pi1:
        raise ValueError("pi1 must be nonempty: the empty set gives no gradation of positive depth")
    bad = pi1 - set(range(1, rs.rank + 1))
    if bad:
        raise ValueError(f"vertex indices out of range 1..{rs.rank}: {sorted(bad)}")
    marks = dynkin_marks(rs)
    return sum(marks[i - 1] for i in pi1)


@dataclass(frozen=True)
class GradationFlags:
    fundamental: bool
    effective: bool
    nondegenerate: bool


def gradation_flags(g: Gradation) -> GradationFlags:
    has_one = any(d != 0 for d in g.labels)
    fundamental = has_one and all(d in (0, 1) for d in g.labels)
    effective = has_one
    if not fundamental:
        nondegenerate = False
    elif g.depth >= 2:
        nondegenerate = True
    else:
        # Depth one: every root space of degree -1 must bracket nontrivially
        # with some other part of the degree -1 space.
        minus_one = g.level_sets.get(-1, ())
        zero = (0,) * g.rs.rank
        nondegenerate = all(
            any(
                add_roots(beta, other) == zero or g.rs.contains(add_roots(beta, other))
                for other in minus_one
            )
            for beta in minus_one
        )
    return GradationFlags(fundamental, effective, nondegenerate)


@dataclass(frozen=True)
class IrreducibleComponent:
    vertex: int
    lowest_weight: Root
    root_set: tuple[Root, ...]

    @property
    def dimension(self) -> int:
        return len(self.root_set)


def component_roots(g: Gradation, vertex: int) -> tuple[Root, ...]:
    """Weights of the degree-zero submodule with lowest weight at ``vertex``.

    Starting from the simple root gamma of the vertex, the set is closed
    under adding degree-zero roots: each step gamma' + phi with phi in R^0
    stays inside the degree-one level and sweeps out the whole submodule.
    """
    gamma = tuple(1 if i + 1 == vertex else 0 for i in range(g.rs.rank))
    zero_roots = g.level_sets.get(0, ())
    members = {gamma}
    frontier = [gamma]
    while frontier:
        base = frontier.pop()
        for phi in zero_roots:
            candidate = add_roots(base, phi)
            if candidate not in members and g.rs.contains(candidate):
                members.add(candidate)
                frontier.append(candidate)
    return tuple(sorted(members))


def irreducible_components(g: Gradation) -> list[IrreducibleComponent]:
    """Decomposition of the degree-one space into irreducible submodules."""
    if not gradation_flags(g).fundamental:
        raise ValueError("irreducible components are defined for fundamental gradations only")
    comps = []
    for vertex in sorted(g.pi1):
        roots = component_roots(g, vertex)
        gamma = tuple(1 if i + 1 == vertex else 0 for i in range(g.rs.rank))
        comps.append(IrreducibleComponent(vertex=vertex, lowest_weight=gamma, root_set=roots))
    return comps
