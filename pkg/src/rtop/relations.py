"""Binary relations on a finite universe.

A relation is stored row-wise: row i is the bitmask of the right
neighborhood r(x_i) = {y | x_i R y}. Left neighborhoods are derived on
demand by transposition.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import TYPE_CHECKING

from .core import Subset, Universe

if TYPE_CHECKING:
    from .coverings import Covering


class BinaryRelation:
    """A binary relation R on U, addressed by right neighborhoods."""

    __slots__ = ("_universe", "_rows")

    def __init__(self, universe: Universe, rows: Iterable[int]):
        rows = tuple(rows)
        if len(rows) != universe.size:
            raise ValueError("one neighborhood row per universe element required")
        full = (1 << universe.size) - 1
        for row in rows:
            if row & ~full:
                raise ValueError("neighborhood bits set beyond the universe size")
        self._universe = universe
        self._rows = rows

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def rows(self) -> tuple[int, ...]:
        """Right-neighborhood bitmasks, one per element index."""
        return self._rows

    # construction -----------------------------------------------------------
    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> BinaryRelation:
        rows = [0] * universe.size
        for x, y in pairs:
            rows[universe.index(x)] |= 1 << universe.index(y)
        return cls(universe, rows)

    @classmethod
    def from_neighborhoods(
        cls, universe: Universe, nbhds: Mapping[str, Iterable[str]]
    ) -> BinaryRelation:
        rows = [0] * universe.size
        for x, ys in nbhds.items():
            rows[universe.index(x)] = universe.subset(ys).bits
        return cls(universe, rows)

    @classmethod
    def identity(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, (1 << i for i in range(universe.size)))

    @classmethod
    def full(cls, universe: Universe) -> BinaryRelation:
        full = (1 << universe.size) - 1
        return cls(universe, (full,) * universe.size)

    # neighborhoods -----------------------------------------------------------
    def right(self, x: str) -> Subset:
        """r(x) = {y | x R y}."""
        return Subset(self._universe, self._rows[self._universe.index(x)])

    def left(self, x: str) -> Subset:
        """l(x) = {y | y R x}, computed by scanning the rows."""
        i = self._universe.index(x)
        bits = 0
        for j, row in enumerate(self._rows):
            if row >> i & 1:
                bits |= 1 << j
        return Subset(self._universe, bits)

    def pairs(self) -> list[tuple[str, str]]:
        """All (x, y) with x R y, in canonical index order."""
        out = []
        for i, row in enumerate(self._rows):
            x = self._universe.label(i)
            bits = row
            while bits:
                low = bits & -bits
                out.append((x, self._universe.label(low.bit_length() - 1)))
                bits ^= low
        return out

    # structural tests ---------------------------------------------------------
    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self._rows))

    def is_symmetric(self) -> bool:
        for i, row in enumerate(self._rows):
            bits = row
            while bits:
                low = bits & -bits
                j = low.bit_length() - 1
                if not self._rows[j] >> i & 1:
                    return False
                bits ^= low
        return True

    def is_transitive(self) -> bool:
        """x R y implies r(y) is contained in r(x)."""
        for row in self._rows:
            reach = 0
            bits = row
            while bits:
                low = bits & -bits
                reach |= self._rows[low.bit_length() - 1]
                bits ^= low
            if reach & ~row:
                return False
        return True

    def is_preorder(self) -> bool:
        return self.is_reflexive() and self.is_transitive()

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def inverse(self) -> BinaryRelation:
        """The relation with x and y swapped; right neighborhoods become left."""
        n = self._universe.size
        rows = [0] * n
        for i, row in enumerate(self._rows):
            bits = row
            while bits:
                low = bits & -bits
                rows[low.bit_length() - 1] |= 1 << i
                bits ^= low
        return BinaryRelation(self._universe, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryRelation)
            and self._universe == other._universe
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._universe, self._rows))

    def __repr__(self) -> str:
        return f"BinaryRelation({self.pairs()!r})"

    # JSON -----------------------------------------------------------------
    def to_doc(self) -> dict:
        return {
            "universe": list(self._universe.labels),
            "pairs": [[x, y] for x, y in self.pairs()],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> BinaryRelation:
        if not isinstance(doc, dict) or "universe" not in doc or "pairs" not in doc:
            raise ValueError('relation document must be {"universe": [...], "pairs": [...]}')
        universe = Universe(doc["universe"])
        pairs = [(p[0], p[1]) for p in doc["pairs"]]
        return cls.from_pairs(universe, pairs)


def relation_from_covering(cov: "Covering") -> BinaryRelation:
    """The relation x R y iff y is in N(x), for N the covering neighborhood.

    The result is always reflexive and transitive.
    """
    universe = cov.universe
    return BinaryRelation(
        universe, (cov.neighborhood_bits(i) for i in range(universe.size))
    )
