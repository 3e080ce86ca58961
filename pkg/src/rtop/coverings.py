"""Covers of a finite universe: minimal descriptions, neighborhoods, the
unary test, the neighborhood transformation, and the bridge from preorders.
"""
from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

from .core import SetFamily, Subset, Universe
from .relations import BinaryRelation

if TYPE_CHECKING:
    from .topology import Topology


class Covering:
    """A family of non-empty subsets whose union is the whole universe."""

    __slots__ = ("_universe", "_members", "_nbhd", "_md", "_md_meet")

    def __init__(
        self,
        universe: Universe,
        sets: Iterable[Subset],
        drop_empty: bool = False,
    ):
        if drop_empty:
            sets = (s for s in sets if s.bits)
        family = SetFamily(universe, sets)
        union = 0
        for m in family:
            if not m.bits:
                raise ValueError("covering members must be non-empty")
            union |= m.bits
        if union != (1 << universe.size) - 1:
            missing = [universe.label(i) for i in range(universe.size) if not union >> i & 1]
            raise ValueError(f"sets do not cover the universe; missing {missing}")
        self._universe = universe
        self._members = family
        # lazy per-element caches, index -> bits
        self._nbhd: list[int | None] = [None] * universe.size
        self._md: list[tuple[int, ...] | None] = [None] * universe.size
        self._md_meet: list[int | None] = [None] * universe.size

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def members(self) -> SetFamily:
        return self._members

    def __iter__(self):
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Covering)
            and self._universe == other._universe
            and self._members == other._members
        )

    def __hash__(self) -> int:
        return hash((self._universe, self._members))

    def __repr__(self) -> str:
        return f"Covering({self._members.to_doc()!r})"

    # neighborhoods ----------------------------------------------------------
    def neighborhood_bits(self, i: int) -> int:
        cached = self._nbhd[i]
        if cached is None:
            bits = (1 << self._universe.size) - 1
            for m in self._members:
                if m.bits >> i & 1:
                    bits &= m.bits
            self._nbhd[i] = cached = bits
        return cached

    def neighborhood(self, x: str) -> Subset:
        """N(x): the intersection of all members containing x."""
        return Subset(self._universe, self.neighborhood_bits(self._universe.index(x)))

    def _md_bits(self, i: int) -> tuple[int, ...]:
        cached = self._md[i]
        if cached is None:
            containing = [m.bits for m in self._members if m.bits >> i & 1]
            minimal = [
                k
                for k in containing
                if not any(other != k and other & ~k == 0 for other in containing)
            ]
            self._md[i] = cached = tuple(minimal)
        return cached

    def minimal_description(self, x: str) -> SetFamily:
        """The inclusion-minimal members containing x."""
        i = self._universe.index(x)
        return SetFamily(
            self._universe, (Subset(self._universe, b) for b in self._md_bits(i))
        )

    def md_meet_bits(self, i: int) -> int:
        """Intersection of the minimal description of element i."""
        cached = self._md_meet[i]
        if cached is None:
            bits = (1 << self._universe.size) - 1
            for b in self._md_bits(i):
                bits &= b
            self._md_meet[i] = cached = bits
        return cached

    def md_meet(self, x: str) -> Subset:
        return Subset(self._universe, self.md_meet_bits(self._universe.index(x)))

    def is_unary(self) -> bool:
        """True when every element's minimal description is a single set."""
        return all(len(self._md_bits(i)) == 1 for i in range(self._universe.size))

    # JSON -----------------------------------------------------------------
    def to_doc(self) -> dict:
        return {
            "universe": list(self._universe.labels),
            "sets": self._members.to_doc(),
        }

    @classmethod
    def from_doc(cls, doc: dict, drop_empty: bool = False) -> Covering:
        if not isinstance(doc, dict) or "universe" not in doc or "sets" not in doc:
            raise ValueError('covering document must be {"universe": [...], "sets": [...]}')
        universe = Universe(doc["universe"])
        return cls(
            universe,
            (universe.subset(labels) for labels in doc["sets"]),
            drop_empty=drop_empty,
        )


def transform_F(cov: Covering) -> Covering:
    """Replace a covering by the family of its neighborhoods {N(x)}.

    Duplicated neighborhoods collapse; the result is always a valid covering
    and a fixed point of the transformation.
    """
    universe = cov.universe
    return Covering(
        universe,
        (Subset(universe, cov.neighborhood_bits(i)) for i in range(universe.size)),
    )


def covering_from_relation(rel: BinaryRelation) -> Covering:
    """The covering {r(x)} of right neighborhoods of a preorder.

    Requires reflexivity and transitivity; the result is unary and the
    minimal description of x is exactly {r(x)}.
    """
    if not rel.is_reflexive():
        raise ValueError("relation must be reflexive to induce a covering")
    if not rel.is_transitive():
        raise ValueError("relation must be transitive to induce a covering")
    universe = rel.universe
    return Covering(universe, (Subset(universe, row) for row in rel.rows))


def covering_from_topology(topo: "Topology", max_opens: int | None = None) -> Covering:
    """A topology's open sets as a covering, with the empty set dropped."""
    return Covering(topo.universe, topo.opens(max_opens), drop_empty=True)
