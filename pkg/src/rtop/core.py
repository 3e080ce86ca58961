"""Finite universes, bitmask subsets, and canonical families of subsets.

Every structure in the engine (relations, coverings, topologies) is built
on top of these three types. Elements are addressed by label externally
and by bit index internally; element 0 is the least significant bit.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapExceededError

# Python ints are arbitrary precision, so a single mask covers both the
# one-word fast path (n <= 64) and larger universes. The cap just keeps
# structures desk-sized.
MAX_UNIVERSE_SIZE = 1024
# Brute-force "for all X" sweeps enumerate 2^n subsets.
MAX_POWERSET_SIZE = 20


class Universe:
    """An ordered finite set of distinct, non-empty element labels."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("universe must have at least one element")
        if len(labels) > MAX_UNIVERSE_SIZE:
            raise CapExceededError(
                f"universe size {len(labels)} exceeds cap {MAX_UNIVERSE_SIZE}"
            )
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise ValueError(f"element label must be a non-empty string, got {label!r}")
            if label in index:
                raise ValueError(f"duplicate element label {label!r}")
            index[label] = i
        self._labels = labels
        self._index = index

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown element {label!r}") from None

    def label(self, i: int) -> str:
        return self._labels[i]

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def subset(self, labels: Iterable[str] = ()) -> Subset:
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return Subset(self, bits)

    def subset_from_bits(self, bits: int) -> Subset:
        return Subset(self, bits)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, (1 << self.size) - 1)

    def singleton(self, label: str) -> Subset:
        return Subset(self, 1 << self.index(label))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"Universe({list(self._labels)!r})"

    def to_doc(self) -> dict:
        """JSON document form: {"elements": [...]}."""
        return {"elements": list(self._labels)}

    @classmethod
    def from_doc(cls, doc: dict) -> Universe:
        if not isinstance(doc, dict) or "elements" not in doc:
            raise ValueError('universe document must be {"elements": [...]}')
        return cls(doc["elements"])


class Subset:
    """An immutable subset of a universe, stored as a bitmask."""

    __slots__ = ("_universe", "_bits")

    def __init__(self, universe: Universe, bits: int):
        full = (1 << universe.size) - 1
        if bits & ~full:
            raise ValueError("bits set beyond the universe size")
        self._universe = universe
        self._bits = bits

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def bits(self) -> int:
        return self._bits

    def _check(self, other: Subset) -> None:
        if self._universe != other._universe:
            raise ValueError("subsets belong to different universes")

    # set algebra ----------------------------------------------------------
    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self._universe, self._bits | other._bits)

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self._universe, self._bits & other._bits)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self._universe, self._bits & ~other._bits)

    def __xor__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self._universe, self._bits ^ other._bits)

    def complement(self) -> Subset:
        full = (1 << self._universe.size) - 1
        return Subset(self._universe, self._bits ^ full)

    def __invert__(self) -> Subset:
        return self.complement()

    def issubset(self, other: Subset) -> bool:
        self._check(other)
        return self._bits & ~other._bits == 0

    def __le__(self, other: Subset) -> bool:
        return self.issubset(other)

    def __lt__(self, other: Subset) -> bool:
        return self.issubset(other) and self._bits != other._bits

    def isdisjoint(self, other: Subset) -> bool:
        self._check(other)
        return self._bits & other._bits == 0

    def intersects(self, other: Subset) -> bool:
        return not self.isdisjoint(other)

    # membership and iteration ----------------------------------------------
    def __contains__(self, label: str) -> bool:
        return bool(self._bits >> self._universe.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        bits = self._bits
        while bits:
            low = bits & -bits
            yield self._universe.label(low.bit_length() - 1)
            bits ^= low

    def __len__(self) -> int:
        return bin(self._bits).count("1")

    def __bool__(self) -> bool:
        return self._bits != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subset)
            and self._universe == other._universe
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self._universe, self._bits))

    def __repr__(self) -> str:
        return "{" + ", ".join(self) + "}"

    def to_labels(self) -> list[str]:
        """Label list in element order; the JSON form of a subset."""
        return list(self)


def union_all(universe: Universe, subsets: Iterable[Subset]) -> Subset:
    """Union of a collection of subsets; empty collection gives the empty set."""
    bits = 0
    for s in subsets:
        if s.universe != universe:
            raise ValueError("subsets belong to different universes")
        bits |= s.bits
    return Subset(universe, bits)


def intersect_all(universe: Universe, subsets: Iterable[Subset]) -> Subset:
    """Intersection of a collection of subsets.

    The intersection of zero sets is the whole universe (the standard
    empty-intersection convention).
    """
    bits = (1 << universe.size) - 1
    for s in subsets:
        if s.universe != universe:
            raise ValueError("subsets belong to different universes")
        bits &= s.bits
    return Subset(universe, bits)


def enumerate_powerset(universe: Universe) -> Iterator[Subset]:
    """All 2^n subsets in ascending bit-pattern order.

    Raises CapExceededError when the universe is too large to sweep.
    """
    n = universe.size
    if n > MAX_POWERSET_SIZE:
        raise CapExceededError(
            f"powerset enumeration needs n <= {MAX_POWERSET_SIZE}, got n = {n}"
        )
    for bits in range(1 << n):
        yield Subset(universe, bits)


class SetFamily:
    """A deduplicated family of subsets in canonical ascending bit order."""

    __slots__ = ("_universe", "_members")

    def __init__(self, universe: Universe, members: Iterable[Subset] = ()):
        seen: set[int] = set()
        collected = []
        for m in members:
            if m.universe != universe:
                raise ValueError("family members belong to different universes")
            if m.bits not in seen:
                seen.add(m.bits)
                collected.append(m)
        collected.sort(key=lambda s: s.bits)
        self._universe = universe
        self._members = tuple(collected)

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def members(self) -> tuple[Subset, ...]:
        return self._members

    def __iter__(self) -> Iterator[Subset]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __getitem__(self, i: int) -> Subset:
        return self._members[i]

    def __contains__(self, s: object) -> bool:
        return isinstance(s, Subset) and s in set(self._members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetFamily)
            and self._universe == other._universe
            and self._members == other._members
        )

    def __hash__(self) -> int:
        return hash((self._universe, self._members))

    def __repr__(self) -> str:
        return "SetFamily([" + ", ".join(repr(m) for m in self._members) + "])"

    def to_doc(self) -> list[list[str]]:
        """JSON form: array of label arrays, canonical order."""
        return [m.to_labels() for m in self._members]

    @classmethod
    def from_doc(cls, universe: Universe, doc: Iterable[Iterable[str]]) -> SetFamily:
        return cls(universe, (universe.subset(labels) for labels in doc))
