"""Satake diagrams of the real forms: coloring, arrows and the catalog.

A Satake diagram is a Dynkin diagram whose vertices are painted black
(compact) or white, with curved arrows pairing white vertices.  A label
vector is of real type for a diagram when black vertices carry label zero
and arrow-paired vertices carry equal labels; only real-type label
vectors grade the real form.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .grading import Gradation
from .rootsys import AlgebraType

_RANKS = {"A": range(1, 9), "B": range(2, 9), "C": range(3, 9),
          "D": range(4, 9), "E": range(6, 9), "F": [4], "G": [2]}


@dataclass(frozen=True)
class SatakeDiagram:
    algebra: AlgebraType
    black: frozenset[int]
    arrows: frozenset[tuple[int, int]]
    name: str | None = None

    def __post_init__(self) -> None:
        n = self.algebra.rank
        vertices = set(range(1, n + 1))
        if not self.black <= vertices:
            raise ValueError(f"black vertices out of range 1..{n}: {sorted(self.black - vertices)}")
        seen: set[int] = set()
        for pair in self.arrows:
            if len(pair) != 2 or pair[0] >= pair[1]:
                raise ValueError(f"arrow {pair} must be an ordered pair (i, j) with i < j")
            for v in pair:
                if v not in vertices:
                    raise ValueError(f"arrow vertex {v} out of range 1..{n}")
                if v in self.black:
                    raise ValueError(f"arrow over black vertex {v}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one arrow")
                seen.add(v)

    @property
    def white(self) -> frozenset[int]:
        return frozenset(range(1, self.algebra.rank + 1)) - self.black

    def arrow_partner(self, v: int) -> int | None:
        for i, j in self.arrows:
            if v == i:
                return j
            if v == j:
                return i
        return None


def split_diagram(algebra: AlgebraType, name: str | None = None) -> SatakeDiagram:
    return SatakeDiagram(algebra, frozenset(), frozenset(),
                         name=name or f"split {algebra}")


@dataclass(frozen=True)
class RealTypeVerdict:
    ok: bool
    black_witness: int | None = None
    arrow_witness: tuple[int, int] | None = None


def check_real_type(sd: SatakeDiagram, labels) -> RealTypeVerdict:
    """Accept iff black vertices have label zero and arrow pairs equal labels."""
    labels = tuple(labels)
    if len(labels) != sd.algebra.rank:
        raise ValueError(f"label vector length {len(labels)} != rank {sd.algebra.rank}")
    for v in sorted(sd.black):
        if labels[v - 1] != 0:
            return RealTypeVerdict(False, black_witness=v)
    for i, j in sorted(sd.arrows):
        if labels[i - 1] != labels[j - 1]:
            return RealTypeVerdict(False, arrow_witness=(i, j))
    return RealTypeVerdict(True)


@dataclass(frozen=True)
class RealComponentSet:
    singles: frozenset[int]
    pairs: frozenset[tuple[int, int]]

    @property
    def count(self) -> int:
        return len(self.singles) + len(self.pairs)


def real_components(sd: SatakeDiagram, g: Gradation) -> RealComponentSet:
    """Partition the label-one vertices into arrow pairs and unpaired singles."""
    verdict = check_real_type(sd, g.labels)
    if not verdict.ok:
        witness = verdict.black_witness if verdict.black_witness is not None else verdict.arrow_witness
        raise ValueError(f"label vector is not of real type for {sd.name or sd.algebra}: witness {witness}")
    if any(d not in (0, 1) for d in g.labels):
        raise ValueError("real components are defined for fundamental (0/1) gradations only")
    pi1 = g.pi1
    pairs = frozenset(p for p in sd.arrows if p[0] in pi1)
    paired = {v for p in pairs for v in p}
    return RealComponentSet(singles=pi1 - paired, pairs=pairs)


# ---------------------------------------------------------------------------
# Catalog of the standard real forms, ranks up to 8.
# ---------------------------------------------------------------------------

def _su(p: int, q: int) -> SatakeDiagram:
    n = p + q
    alg = AlgebraType("A", n - 1)
    if p == q:
        arrows = frozenset((i, n - i) for i in range(1, p))
        black: frozenset[int] = frozenset()
    else:
        arrows = frozenset((i, n - i) for i in range(1, p + 1))
        black = frozenset(range(p + 1, n - p))
    return SatakeDiagram(alg, black, arrows, name=f"su({p},{q})")


def _so(p: int, q: int) -> SatakeDiagram:
    name = f"so({p},{q})"
    if (p + q) % 2 == 1:
        ell = (p + q - 1) // 2
        alg = AlgebraType("B", ell)
        return SatakeDiagram(alg, frozenset(range(p + 1, ell + 1)), frozenset(), name=name)
    ell = (p + q) // 2
    alg = AlgebraType("D", ell)
    if p == ell:
        return SatakeDiagram(alg, frozenset(), frozenset(), name=name)
    if p == ell - 1:
        return SatakeDiagram(alg, frozenset(), frozenset({(ell - 1, ell)}), name=name)
    return SatakeDiagram(alg, frozenset(range(p + 1, ell + 1)), frozenset(), name=name)


def _so_star(two_ell: int) -> SatakeDiagram:
    ell = two_ell // 2
    alg = AlgebraType("D", ell)
    if ell % 2 == 1:
        black = frozenset(range(1, ell - 1, 2))
        arrows = frozenset({(ell - 1, ell)})
    else:
        black = frozenset(range(1, ell, 2))
        arrows = frozenset()
    return SatakeDiagram(alg, black, arrows, name=f"so*({two_ell})")


def standard_catalog(max_rank: int = 8) -> dict[str, SatakeDiagram]:
    """All built-in diagrams keyed by normalized name, in deterministic order."""
    entries: list[SatakeDiagram] = []
    for fam, ranks in _RANKS.items():
        for ell in ranks:
            if ell <= max_rank:
                entries.append(split_diagram(AlgebraType(fam, ell)))
    for n in range(2, max_rank + 2):
        entries.append(split_diagram(AlgebraType("A", n - 1), name=f"sl({n},R)"))
    for n in range(2, max_rank + 2):
        for p in range(1, n // 2 + 1):
            entries.append(_su(p, n - p))
    for ell in range(2, max_rank + 1):  # B_ell: so(p, 2*ell+1-p)
        for p in range(1, ell + 1):
            entries.append(_so(p, 2 * ell + 1 - p))
    for ell in range(4, max_rank + 1):  # D_ell: so(p, 2*ell-p)
        for p in range(1, ell + 1):
            entries.append(_so(p, 2 * ell - p))
    for ell in range(3, max_rank + 1):
        entries.append(split_diagram(AlgebraType("C", ell), name=f"sp({ell},R)"))
    for ell in range(4, max_rank + 1):
        entries.append(_so_star(2 * ell))
    e6 = AlgebraType("E", 6)
    entries.append(SatakeDiagram(e6, frozenset(), frozenset(), name="E6 I"))
    entries.append(SatakeDiagram(e6, frozenset(), frozenset({(1, 6), (3, 5)}), name="E6 II"))
    entries.append(SatakeDiagram(e6, frozenset({3, 4, 5}), frozenset({(1, 6)}), name="E6 III"))
    entries.append(SatakeDiagram(e6, frozenset({2, 3, 4, 5}), frozenset(), name="E6 IV"))
    return {normalize_name(sd.name): sd for sd in entries}


def normalize_name(name: str) -> str:
    return "".join(name.split()).lower()


_BUNDLED: dict[str, SatakeDiagram] | None = None


def bundled_catalog() -> dict[str, SatakeDiagram]:
    """Catalog loaded from the packaged asset file (cached)."""
    global _BUNDLED
    if _BUNDLED is None:
        from .speclang import parse_catalog
        text = resources.files("paracr.data").joinpath("satake_catalog.txt").read_text()
        _BUNDLED = {normalize_name(sd.name): sd for sd in parse_catalog(text)}
    return _BUNDLED


def catalog_lookup(real_form_name: str,
                   catalog: dict[str, SatakeDiagram] | None = None) -> SatakeDiagram:
    if catalog is None:
        catalog = bundled_catalog()
    key = normalize_name(real_form_name)
    try:
        return catalog[key]
    except KeyError:
        names = ", ".join(sorted(sd.name for sd in catalog.values()))
        raise KeyError(
            f"unknown real form {real_form_name!r}; available: {names}"
        ) from None
