"""Finite topologies generated from subbases.

A finite topology is represented by its minimal-neighborhood map: N(x) is
the smallest open set containing x. That map determines the full open-set
family (every open set is a union of minimal neighborhoods), so interior,
closure and equality never require enumeration. The full family can be
materialized on demand, capped because the open count can reach 2^n.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping

from .core import SetFamily, Subset, Universe
from .errors import CapExceededError
from .relations import BinaryRelation

DEFAULT_MAX_OPENS = 1 << 16


class Subbase:
    """A family of subsets used to generate a topology.

    Empty members are dropped: they contribute nothing to any generated
    open set except the empty set, which is open regardless.
    """

    __slots__ = ("_universe", "_members")

    def __init__(self, universe: Universe, members: Iterable[Subset] = ()):
        self._universe = universe
        self._members = SetFamily(universe, (m for m in members if m.bits))

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
            isinstance(other, Subbase)
            and self._universe == other._universe
            and self._members == other._members
        )

    def __hash__(self) -> int:
        return hash((self._universe, self._members))

    def __repr__(self) -> str:
        return f"Subbase({self._members.to_doc()!r})"

    def to_doc(self) -> dict:
        return {
            "universe": list(self._universe.labels),
            "sets": self._members.to_doc(),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> Subbase:
        if not isinstance(doc, dict) or "universe" not in doc or "sets" not in doc:
            raise ValueError('subbase document must be {"universe": [...], "sets": [...]}')
        universe = Universe(doc["universe"])
        return cls(universe, (universe.subset(labels) for labels in doc["sets"]))


def subbase_from_relation(rel: BinaryRelation) -> Subbase:
    """The family of right neighborhoods {r(x)} as a subbase.

    Empty neighborhoods (elements with no successors) are excluded by the
    Subbase constructor.
    """
    universe = rel.universe
    return Subbase(universe, (Subset(universe, row) for row in rel.rows))


class Topology:
    """A finite topology, held as its minimal-neighborhood map."""

    __slots__ = ("_universe", "_min", "_opens")

    def __init__(self, universe: Universe, min_rows: Iterable[int]):
        min_rows = tuple(min_rows)
        if len(min_rows) != universe.size:
            raise ValueError("one minimal neighborhood per element required")
        for i, row in enumerate(min_rows):
            if not row >> i & 1:
                raise ValueError(
                    f"minimal neighborhood of {universe.label(i)!r} must contain it"
                )
        for i, row in enumerate(min_rows):
            bits = row
            while bits:
                low = bits & -bits
                j = low.bit_length() - 1
                if min_rows[j] & ~row:
                    raise ValueError(
                        "inconsistent neighborhoods: "
                        f"{universe.label(j)!r} lies in the neighborhood of "
                        f"{universe.label(i)!r} but its own neighborhood is not contained"
                    )
                bits ^= low
        self._universe = universe
        self._min = min_rows
        self._opens: SetFamily | None = None

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def min_rows(self) -> tuple[int, ...]:
        """Minimal-neighborhood bitmasks, one per element index."""
        return self._min

    @classmethod
    def from_subbase(cls, subbase: Subbase) -> Topology:
        """Generate the coarsest topology containing every subbase member.

        The minimal neighborhood of x is the intersection of the subbase
        members containing x, the whole universe when there are none.
        """
        universe = subbase.universe
        full = (1 << universe.size) - 1
        rows = []
        for i in range(universe.size):
            bits = full
            for m in subbase.members:
                if m.bits >> i & 1:
                    bits &= m.bits
            rows.append(bits)
        return cls(universe, rows)

    @classmethod
    def from_min_neighborhoods(
        cls, universe: Universe, nbhds: Mapping[str, Iterable[str]]
    ) -> Topology:
        rows = [0] * universe.size
        seen = set()
        for x, ys in nbhds.items():
            i = universe.index(x)
            rows[i] = universe.subset(ys).bits
            seen.add(i)
        if len(seen) != universe.size:
            raise ValueError("a minimal neighborhood is required for every element")
        return cls(universe, rows)

    @classmethod
    def discrete(cls, universe: Universe) -> Topology:
        return cls(universe, (1 << i for i in range(universe.size)))

    @classmethod
    def indiscrete(cls, universe: Universe) -> Topology:
        full = (1 << universe.size) - 1
        return cls(universe, (full,) * universe.size)

    # queries -----------------------------------------------------------------
    def min_nbhd(self, x: str) -> Subset:
        """The smallest open set containing x."""
        return Subset(self._universe, self._min[self._universe.index(x)])

    def is_open(self, s: Subset) -> bool:
        """A set is open iff it contains the minimal neighborhood of each point."""
        bits = s.bits
        probe = bits
        while probe:
            low = probe & -probe
            if self._min[low.bit_length() - 1] & ~bits:
                return False
            probe ^= low
        return True

    def is_closed(self, s: Subset) -> bool:
        return self.is_open(s.complement())

    def interior(self, s: Subset) -> Subset:
        """The largest open subset: the points whose minimal neighborhood fits."""
        bits = 0
        for i, row in enumerate(self._min):
            if row & ~s.bits == 0:
                bits |= 1 << i
        return Subset(self._universe, bits)

    def closure(self, s: Subset) -> Subset:
        """The smallest closed superset: points whose minimal neighborhood meets s."""
        bits = 0
        for i, row in enumerate(self._min):
            if row & s.bits:
                bits |= 1 << i
        return Subset(self._universe, bits)

    def boundary(self, s: Subset) -> Subset:
        return self.closure(s) - self.interior(s)

    def is_exact(self, s: Subset) -> bool:
        """Exact sets have empty boundary (they are clopen); others are rough."""
        return not self.boundary(s)

    def opens(self, max_opens: int | None = None) -> SetFamily:
        """Materialize the full open-set family, in canonical order.

        The family is the union closure of the minimal neighborhoods plus
        the empty set. Enumeration aborts with CapExceededError as soon as
        the count passes the cap (default 2^16).
        """
        if self._opens is not None and max_opens is None:
            return self._opens
        cap = DEFAULT_MAX_OPENS if max_opens is None else max_opens
        generators = sorted(set(self._min))
        opens = {0}
        frontier = [0]
        while frontier:
            base = frontier.pop()
            for g in generators:
                candidate = base | g
                if candidate not in opens:
                    opens.add(candidate)
                    if len(opens) > cap:
                        raise CapExceededError(
                            f"open-set family exceeds cap of {cap} sets"
                        )
                    frontier.append(candidate)
        family = SetFamily(
            self._universe, (Subset(self._universe, b) for b in sorted(opens))
        )
        if max_opens is None:
            self._opens = family
        return family

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Topology)
            and self._universe == other._universe
            and self._min == other._min
        )

    def __hash__(self) -> int:
        return hash((self._universe, self._min))

    def __repr__(self) -> str:
        nbhds = {
            self._universe.label(i): Subset(self._universe, row).to_labels()
            for i, row in enumerate(self._min)
        }
        return f"Topology(min_neighborhoods={nbhds!r})"

    def to_doc(self) -> dict:
        return {
            "universe": list(self._universe.labels),
            "min_neighborhoods": {
                self._universe.label(i): Subset(self._universe, row).to_labels()
                for i, row in enumerate(self._min)
            },
        }


def generate_from_subbase(subbase: Subbase) -> Topology:
    return Topology.from_subbase(subbase)


def topologies_equal(t1: Topology, t2: Topology) -> bool:
    """Pointwise equality of minimal-neighborhood maps.

    On a finite universe this is equivalent to having identical open-set
    families. Raises on mixed universes.
    """
    if t1.universe != t2.universe:
        raise ValueError("topologies are defined on different universes")
    return t1.min_rows == t2.min_rows


def check_family_axioms(family: SetFamily) -> list[str]:
    """Which open-set axioms a plain family violates; empty means a topology.

    Checks the empty set and the universe are present, closure under
    pairwise union, and closure under pairwise intersection (for a finite
    family these imply arbitrary union and finite intersection).
    """
    universe = family.universe
    bits = {m.bits for m in family}
    full = (1 << universe.size) - 1
    violations = []
    if 0 not in bits:
        violations.append("T1: the empty set is missing")
    if full not in bits:
        violations.append("T1: the whole universe is missing")
    member_list = sorted(bits)
    for i, a in enumerate(member_list):
        for b in member_list[i + 1 :]:
            if a | b not in bits:
                fa = Subset(universe, a).to_labels()
                fb = Subset(universe, b).to_labels()
                violations.append(f"T2: union of {fa} and {fb} is missing")
            if a & b not in bits:
                fa = Subset(universe, a).to_labels()
                fb = Subset(universe, b).to_labels()
                violations.append(f"T3: intersection of {fa} and {fb} is missing")
    return violations


def family_is_topology(family: SetFamily) -> bool:
    return not check_family_axioms(family)
