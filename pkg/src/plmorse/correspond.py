"""Matching PL critical vertices with critical simplices of a gradient field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .gvf import GradientField, check_relative_perfectness
from .homology import Field
from .plcrit import h_classify
from .simplicial import Simplex, SimplicialComplex, VertexScalarField


@dataclass(frozen=True)
class CorrespondenceEntry:
    vertex: int
    level: float
    index: int
    multiplicity: int
    matched: tuple[Simplex, ...]
    # raw f_max of each matched simplex, kept so the map can be audited alone
    matched_levels: tuple[float, ...] = ()

    @property
    def surplus(self) -> int:
        return max(0, len(self.matched) - self.multiplicity)

    @property
    def deficit(self) -> int:
        return max(0, self.multiplicity - len(self.matched))


@dataclass
class CorrespondenceMap:
    entries: list[CorrespondenceEntry]
    # critical simplices owned by a vertex that is not critical in their index
    unmatched: list[tuple[int, Simplex]] = dc_field(default_factory=list)
    relatively_perfect: bool | None = None

    @property
    def exact(self) -> bool:
        return not self.unmatched and all(e.surplus == 0 and e.deficit == 0 for e in self.entries)

    @property
    def bijective(self) -> bool:
        return self.exact and all(e.multiplicity == 1 for e in self.entries)


def correspondence(
    K: SimplicialComplex,
    f: VertexScalarField,
    V: GradientField,
    field: Field | str = Field.GF2,
    certify: bool = True,
) -> CorrespondenceMap:
    """Pair each PL critical vertex with the critical simplices at its level.

    A critical simplex is attributed to its maximum vertex (which puts it in
    that vertex's star at that vertex's level). Shortfalls and excesses are
    recorded on the entries rather than raised. With ``certify`` the field
    is also checked for relative perfectness, in which case the counts must
    come out exact.
    """
    owned: dict[int, dict[int, list[Simplex]]] = {}
    for s in V.critical(K):
        owned.setdefault(f.argmax(s), {}).setdefault(len(s) - 1, []).append(s)
    entries, unmatched = [], []
    for v in f.order():
        mult = h_classify(K, f, v, field).multiplicities
        found = owned.get(v, {})
        for i in sorted(set(mult) | set(found)):
            sims = tuple(sorted(found.get(i, ())))
            k = mult.get(i, 0)
            if k == 0:
                unmatched.extend((v, s) for s in sims)
                continue
            entries.append(CorrespondenceEntry(v, f[v], i, k, sims, tuple(f.fmax(s)[0] for s in sims)))
    cmap = CorrespondenceMap(entries, unmatched)
    if certify:
        cmap.relatively_perfect = check_relative_perfectness(K, f, V, field).is_rp
        if cmap.relatively_perfect and not cmap.exact:
            raise AssertionError("relatively perfect field with an inexact correspondence")
    return cmap


def verify_correspondence(cmap: CorrespondenceMap, pl_morse: bool) -> list[str]:
    """Problems found in ``cmap``; an empty list means it is clean."""
    problems = []
    for e in cmap.entries:
        for s, lvl in zip(e.matched, e.matched_levels):
            if e.vertex not in s:
                problems.append(f"simplex {list(s)} does not contain vertex {e.vertex}")
            if lvl != e.level:
                problems.append(f"simplex {list(s)} sits at level {lvl:g}, vertex {e.vertex} at {e.level:g}")
        if len(e.matched) != e.multiplicity:
            problems.append(
                f"vertex {e.vertex} index {e.index}: multiplicity {e.multiplicity} but {len(e.matched)} critical simplices"
            )
    for v, s in cmap.unmatched:
        problems.append(f"critical simplex {list(s)} at vertex {v} matches no PL critical index")
    if pl_morse and not cmap.bijective and not problems:
        problems.append("function is PL Morse but the correspondence is not bijective")
    return problems
