"""Superfluous-relation detection and exhaustive minimal-reduct search.

A family of named relations generates a topology through the union of
their right-neighborhood subbases. A member is superfluous when removing
it leaves that topology unchanged; a reduct is a minimal sub-family that
still generates it. Equality of generated structures is decided on the
minimal-neighborhood maps, because those determine a finite topology
completely while bases and subbases are representation-dependent.
"""
from __future__ import annotations

import hashlib
import json
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .core import Subset, Universe
from .errors import CapExceededError
from .relations import BinaryRelation
from .topology import Subbase, Topology, topologies_equal

if TYPE_CHECKING:
    from .infosystem import InformationSystem

MAX_FAMILY_SIZE = 16

MINIMALITY_NOTE = (
    "each reported reduct M generates the same minimal-neighborhood topology "
    "as the queried family and stays irredundant: removal is tested against "
    "M itself (M minus a member), not against the full family"
)


class RelationFamily:
    """Named relations sharing one universe."""

    __slots__ = ("_universe", "_names", "_rels")

    def __init__(self, universe: Universe, relations: Iterable[tuple[str, BinaryRelation]]):
        names: list[str] = []
        rels: dict[str, BinaryRelation] = {}
        for name, rel in relations:
            if name in rels:
                raise ValueError(f"duplicate relation name {name!r}")
            if rel.universe != universe:
                raise ValueError(f"relation {name!r} is on a different universe")
            names.append(name)
            rels[name] = rel
        if not names:
            raise ValueError("a relation family needs at least one member")
        self._universe = universe
        self._names = tuple(names)
        self._rels = rels

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def relation(self, name: str) -> BinaryRelation:
        if name not in self._rels:
            raise ValueError(f"unknown relation {name!r}")
        return self._rels[name]

    @classmethod
    def from_infosystem(cls, info: "InformationSystem") -> RelationFamily:
        return cls(
            info.objects,
            ((a, info.relation_for_attribute(a)) for a in info.attributes),
        )


def family_topology(fam: RelationFamily, p: Iterable[str]) -> Topology:
    """Topology generated by the pooled right neighborhoods of the members of p."""
    chosen = list(p)
    if not chosen:
        raise ValueError("at least one relation name is required")
    universe = fam.universe
    members = []
    for name in chosen:
        rel = fam.relation(name)
        members.extend(Subset(universe, row) for row in rel.rows)
    return Topology.from_subbase(Subbase(universe, members))


def is_superfluous(fam: RelationFamily, p: Iterable[str], r: str) -> bool:
    """True when dropping r from p leaves the generated topology unchanged."""
    chosen = list(p)
    if r not in chosen:
        raise ValueError(f"{r!r} is not a member of the queried family")
    if len(chosen) < 2:
        raise ValueError("superfluity needs a family of at least two relations")
    rest = [name for name in chosen if name != r]
    return topologies_equal(family_topology(fam, chosen), family_topology(fam, rest))


@dataclass(frozen=True)
class ReductReport:
    """Outcome of an exhaustive reduct search over one relation family."""

    family: tuple[str, ...]
    superfluous: tuple[str, ...]
    reducts: tuple[tuple[str, ...], ...]
    fingerprint: str

    def to_doc(self) -> dict:
        return {
            "family": list(self.family),
            "superfluous": list(self.superfluous),
            "reducts": [list(m) for m in self.reducts],
            "fingerprint": self.fingerprint,
            "minimality": MINIMALITY_NOTE,
        }


def topology_fingerprint(topo: Topology) -> str:
    """Stable digest of a topology's minimal-neighborhood map."""
    doc = topo.to_doc()
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def minimal_reducts(fam: RelationFamily, p: Iterable[str] | None = None) -> ReductReport:
    """All inclusion-minimal sub-families generating the same topology as p.

    Exhaustive search by ascending cardinality; supersets of found reducts
    are pruned. The report is canonically sorted (names alphabetically,
    reducts by size then name), so it does not depend on the order the
    query listed the relations.
    """
    chosen = list(p) if p is not None else list(fam.names)
    if not chosen:
        raise ValueError("at least one relation name is required")
    seen = set()
    for name in chosen:
        fam.relation(name)
        if name in seen:
            raise ValueError(f"duplicate name {name!r} in query")
        seen.add(name)
    if len(chosen) > MAX_FAMILY_SIZE:
        raise CapExceededError(
            f"exhaustive reduct search capped at {MAX_FAMILY_SIZE} relations, "
            f"got {len(chosen)}"
        )
    chosen.sort()
    reference = family_topology(fam, chosen)

    superfluous = []
    if len(chosen) >= 2:
        superfluous = [name for name in chosen if is_superfluous(fam, chosen, name)]

    found: list[tuple[str, ...]] = []
    for size in range(1, len(chosen) + 1):
        for combo in combinations(chosen, size):
            if any(set(m) <= set(combo) for m in found):
                continue
            if topologies_equal(family_topology(fam, combo), reference):
                found.append(combo)
    found.sort(key=lambda m: (len(m), m))
    return ReductReport(
        family=tuple(chosen),
        superfluous=tuple(superfluous),
        reducts=tuple(found),
        fingerprint=topology_fingerprint(reference),
    )
