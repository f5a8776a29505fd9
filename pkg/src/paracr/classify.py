"""Classification predicates: admissibility, Abelian parts, alternate splits.

The verdicts here decide whether a choice of label-one simple roots, and a
two-part split of that choice, produces a pair of commutative subalgebras
in degree minus one.  Every negative verdict carries a concrete witness
root (the lexicographically least one).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .grading import (
    Gradation,
    GradationFlags,
    depth_by_marks,
    gradation_flags,
    irreducible_components,
    labels_for,
    make_gradation,
)
from .rootsys import AlgebraType, Root, RootSystem, build_root_system, dynkin_edges
from .satake import RealComponentSet, SatakeDiagram, check_real_type, real_components


@dataclass(frozen=True)
class AdmissibleVerdict:
    admissible: bool
    reason: str | None = None  # "size" or "root" on rejection
    witness: Root | None = None


def _validate_vertices(rs: RootSystem, vertices, what: str) -> frozenset[int]:
    vertices = frozenset(vertices)
    bad = vertices - set(range(1, rs.rank + 1))
    if bad:
        raise ValueError(f"{what} contains indices out of range 1..{rs.rank}: {sorted(bad)}")
    return vertices


def check_admissible(g: Gradation, pi1) -> AdmissibleVerdict:
    """Reject when some root doubles one chosen vertex and avoids the others.

    A witness is a root with coefficient exactly two at a single pi1 vertex
    and coefficient zero at every other pi1 vertex.
    """
    pi1 = _validate_vertices(g.rs, pi1, "pi1")
    witness = _admissibility_witness(g.rs, pi1)
    if witness is not None:
        reason = "root"
    elif len(pi1) < 2:
        return AdmissibleVerdict(False, reason="size")
    else:
        return AdmissibleVerdict(True)
    return AdmissibleVerdict(False, reason=reason, witness=witness)


def _admissibility_witness(rs: RootSystem, pi1: frozenset[int]) -> Root | None:
    idx = sorted(v - 1 for v in pi1)
    for root in rs.roots:
        if sum(root) <= 0:
            continue
        coeffs = [root[i] for i in idx]
        if coeffs.count(2) == 1 and coeffs.count(0) == len(coeffs) - 1:
            return root
    return None


@dataclass(frozen=True)
class AbelianVerdict:
    abelian: bool
    witness: Root | None = None


def check_abelian_part(g: Gradation, part, pi1=None) -> AbelianVerdict:
    """The part spans an Abelian subalgebra iff no root concentrates
    label-one coefficient mass two on it.

    A witness is a root whose coefficients at the part vertices sum to two
    while every other pi1 vertex has coefficient zero.
    """
    pi1 = g.pi1 if pi1 is None else _validate_vertices(g.rs, pi1, "pi1")
    part = frozenset(part)
    if not part <= pi1:
        raise ValueError(f"part {sorted(part)} is not a subset of pi1 {sorted(pi1)}")
    part_idx = [v - 1 for v in sorted(part)]
    other_idx = [v - 1 for v in sorted(pi1 - part)]
    for root in g.rs.roots:
        if sum(root) <= 0:
            continue
        if any(root[i] != 0 for i in other_idx):
            continue
        if sum(root[i] for i in part_idx) == 2:
            return AbelianVerdict(False, witness=root)
    return AbelianVerdict(True)


@dataclass(frozen=True)
class Pi1Decomposition:
    plus: frozenset[int]
    minus: frozenset[int]

    def __post_init__(self) -> None:
        if not self.plus or not self.minus:
            raise ValueError("both parts of a decomposition must be nonempty")
        if self.plus & self.minus:
            raise ValueError(f"parts overlap: {sorted(self.plus & self.minus)}")

    @property
    def pi1(self) -> frozenset[int]:
        return self.plus | self.minus


def respects_arrows(sd: SatakeDiagram | None, dec: Pi1Decomposition) -> bool:
    """Arrow-paired vertices must lie in the same part."""
    if sd is None:
        return True
    for i, j in sd.arrows:
        if i in dec.pi1 or j in dec.pi1:
            if (i in dec.plus) != (j in dec.plus) or (i in dec.minus) != (j in dec.minus):
                return False
    return True


def is_alternate(sd: SatakeDiagram | None, dec: Pi1Decomposition,
                 algebra: AlgebraType) -> bool:
    """Plus- and minus-vertices separate each other along the diagram."""
    if not respects_arrows(sd, dec):
        return False
    edges = dynkin_edges(algebra)
    for deleted, kept in ((dec.plus, dec.minus), (dec.minus, dec.plus)):
        for comp in _components_without(algebra.rank, edges, deleted):
            if len(comp & kept) > 1:
                return False
    return True


def _components_without(rank: int, edges, deleted: frozenset[int]) -> list[frozenset[int]]:
    remaining = set(range(1, rank + 1)) - deleted
    adjacency: dict[int, set[int]] = {v: set() for v in remaining}
    for i, j in edges:
        if i in remaining and j in remaining:
            adjacency[i].add(j)
            adjacency[j].add(i)
    comps = []
    seen: set[int] = set()
    for start in sorted(remaining):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adjacency[v] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


@dataclass(frozen=True)
class DecompositionVerdict:
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    alternate: bool
    plus_abelian: AbelianVerdict
    minus_abelian: AbelianVerdict
    paracr: bool


@dataclass(frozen=True)
class ClassificationReport:
    algebra: AlgebraType
    real_form: str | None
    pi1: tuple[int, ...]
    admissible: AdmissibleVerdict
    depth: int
    flags: GradationFlags
    component_count: int
    component_dimensions: tuple[int, ...]
    real_components: RealComponentSet | None
    decompositions: tuple[DecompositionVerdict, ...]

    @property
    def any_paracr(self) -> bool:
        return any(d.paracr for d in self.decompositions)


def _evaluate_decomposition(g: Gradation, sd: SatakeDiagram | None,
                            admissible: AdmissibleVerdict,
                            dec: Pi1Decomposition) -> DecompositionVerdict:
    alternate = is_alternate(sd, dec, g.rs.algebra)
    plus_ab = check_abelian_part(g, dec.plus)
    minus_ab = check_abelian_part(g, dec.minus)
    both_abelian = plus_ab.abelian and minus_ab.abelian
    paracr = admissible.admissible and both_abelian
    # Structural identity behind the classification: for splits respecting
    # the arrows, the two parts are Abelian exactly when the chosen set is
    # admissible and the split is alternate.
    if respects_arrows(sd, dec):
        root_ok = admissible.reason != "root"
        assert both_abelian == (root_ok and alternate), (g.rs.algebra, dec)
    return DecompositionVerdict(
        plus=tuple(sorted(dec.plus)),
        minus=tuple(sorted(dec.minus)),
        alternate=alternate,
        plus_abelian=plus_ab,
        minus_abelian=minus_ab,
        paracr=paracr,
    )


def _decomposition_units(sd: SatakeDiagram | None, pi1: frozenset[int]) -> list[tuple[int, ...]]:
    """Atomic units for splitting: arrow pairs are contracted to one unit."""
    if sd is None:
        return [(v,) for v in sorted(pi1)]
    units: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for v in sorted(pi1):
        if v in seen:
            continue
        partner = sd.arrow_partner(v)
        if partner is not None and partner in pi1:
            units.append(tuple(sorted((v, partner))))
            seen |= {v, partner}
        else:
            units.append((v,))
            seen.add(v)
    return units


def all_decompositions(sd: SatakeDiagram | None, pi1) -> list[Pi1Decomposition]:
    """Every split into two nonempty parts respecting the arrows, up to swap.

    The unit containing the least vertex is put in the plus part; order is
    deterministic.
    """
    pi1 = frozenset(pi1)
    units = _decomposition_units(sd, pi1)
    if len(units) < 2:
        return []
    head, rest = units[0], units[1:]
    decs = []
    for bits in range(2 ** len(rest) - 1):
        plus = set(head)
        minus: set[int] = set()
        for k, unit in enumerate(rest):
            (plus if bits >> k & 1 else minus).update(unit)
        decs.append(Pi1Decomposition(frozenset(plus), frozenset(minus)))
    return decs


def classify(algebra: AlgebraType,
             real_form: SatakeDiagram | None,
             pi1,
             decomposition: Pi1Decomposition | None = None,
             enumerate_decompositions: bool = False) -> ClassificationReport:
    """Full verdict for one (algebra, real form, pi1) and its splits."""
    rs = build_root_system(algebra)
    pi1 = _validate_vertices(rs, pi1, "pi1")
    if real_form is not None:
        if real_form.algebra != algebra:
            raise ValueError(
                f"real form {real_form.name!r} is a form of {real_form.algebra}, not {algebra}"
            )
        black_in_pi1 = pi1 & real_form.black
        if black_in_pi1:
            raise ValueError(f"pi1 contains black vertices: {sorted(black_in_pi1)}")
    labels = labels_for(rs, pi1)
    if real_form is not None:
        verdict = check_real_type(real_form, labels)
        if not verdict.ok:
            witness = (verdict.black_witness if verdict.black_witness is not None
                       else verdict.arrow_witness)
            raise ValueError(f"label vector is not of real type: witness {witness}")
    g = make_gradation(rs, labels)
    if pi1:
        assert g.depth == depth_by_marks(rs, pi1)
    admissible = check_admissible(g, pi1)
    flags = gradation_flags(g)
    comps = irreducible_components(g) if flags.fundamental else []
    real_comps = real_components(real_form, g) if real_form is not None else None

    decs: list[Pi1Decomposition] = []
    if decomposition is not None:
        if decomposition.pi1 != pi1:
            raise ValueError("decomposition does not partition pi1")
        if not respects_arrows(real_form, decomposition):
            raise ValueError("decomposition splits an arrow pair")
        decs.append(decomposition)
    if enumerate_decompositions:
        decs.extend(d for d in all_decompositions(real_form, pi1) if d != decomposition)

    verdicts = tuple(_evaluate_decomposition(g, real_form, admissible, d) for d in decs)
    return ClassificationReport(
        algebra=algebra,
        real_form=real_form.name if real_form is not None else None,
        pi1=tuple(sorted(pi1)),
        admissible=admissible,
        depth=g.depth,
        flags=flags,
        component_count=len(comps),
        component_dimensions=tuple(c.dimension for c in comps),
        real_components=real_comps,
        decompositions=verdicts,
    )


def enumerate_pi1(real_form: SatakeDiagram | None, algebra: AlgebraType,
                  min_size: int = 2) -> list[frozenset[int]]:
    """All real-type label-one sets of at least min_size vertices, in order."""
    if real_form is None:
        units = [(v,) for v in range(1, algebra.rank + 1)]
    else:
        whites = sorted(real_form.white)
        units = _decomposition_units(real_form, frozenset(whites))
    sets = []
    for k in range(1, len(units) + 1):
        for combo in itertools.combinations(units, k):
            chosen = frozenset(v for unit in combo for v in unit)
            if len(chosen) >= min_size:
                sets.append(chosen)
    return sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))


def enumerate_reports(algebra: AlgebraType,
                      real_form: SatakeDiagram | None = None,
                      *,
                      with_decompositions: bool = True,
                      max_rank: int = 8) -> list[ClassificationReport]:
    """Classify every admissible-candidate pi1 of the algebra or real form."""
    if algebra.rank > max_rank:
        raise ValueError(
            f"rank {algebra.rank} exceeds the enumeration bound {max_rank}; "
            "raise the bound explicitly to proceed"
        )
    if real_form is not None and real_form.algebra != algebra:
        raise ValueError(
            f"real form {real_form.name!r} is a form of {real_form.algebra}, not {algebra}"
        )
    return [
        classify(algebra, real_form, pi1, enumerate_decompositions=with_decompositions)
        for pi1 in enumerate_pi1(real_form, algebra)
    ]
