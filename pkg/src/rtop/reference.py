"""Direct set-comprehension transcriptions of the operator definitions.

This module is the engine's independent second route: it works on plain
frozensets of labels, computes interiors and closures from materialized
open families, and never touches the bitmask code paths. The verifier
replays every counterexample through these functions before emitting it,
and the tests use them as the oracle for frozen expected values.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from itertools import chain, combinations

Labels = frozenset[str]


def powerset(universe: Sequence[str]) -> list[Labels]:
    items = list(universe)
    return [
        frozenset(combo)
        for combo in chain.from_iterable(
            combinations(items, k) for k in range(len(items) + 1)
        )
    ]


def neighborhood(sets: Iterable[Labels], x: str) -> Labels:
    """Intersection of the covering members containing x."""
    containing = [k for k in sets if x in k]
    out = containing[0]
    for k in containing[1:]:
        out &= k
    return out


def minimal_description(sets: Iterable[Labels], x: str) -> list[Labels]:
    containing = [k for k in sets if x in k]
    return [
        k
        for k in containing
        if not any(other < k for other in containing)
    ]


def md_meets(universe: Sequence[str], sets: Iterable[Labels]) -> dict[str, Labels]:
    """Per-element intersection of the minimal description, computed once."""
    sets = list(sets)
    out = {}
    for e in universe:
        md = minimal_description(sets, e)
        meet = md[0]
        for k in md[1:]:
            meet &= k
        out[e] = meet
    return out


def zhu_lower(sets: Iterable[Labels], x: Labels) -> Labels:
    out: Labels = frozenset()
    for k in sets:
        if k <= x:
            out |= k
    return out


def zhu_upper(sets: Iterable[Labels], x: Labels) -> Labels:
    sets = list(sets)
    low = zhu_lower(sets, x)
    out = low
    for e in x - low:
        out |= neighborhood(sets, e)
    return out


def xu_zhang_lower(universe: Sequence[str], sets: Iterable[Labels], x: Labels) -> Labels:
    sets = list(sets)
    result = set()
    for e in universe:
        md = minimal_description(sets, e)
        meet = md[0]
        for k in md[1:]:
            meet &= k
        if meet <= x:
            result.add(e)
    return frozenset(result)


def xu_zhang_upper(universe: Sequence[str], sets: Iterable[Labels], x: Labels) -> Labels:
    sets = list(sets)
    result = set()
    for e in universe:
        md = minimal_description(sets, e)
        meet = md[0]
        for k in md[1:]:
            meet &= k
        if meet & x:
            result.add(e)
    return frozenset(result)


def yao3_lower(nbhds: Mapping[str, Labels], x: Labels) -> Labels:
    out: Labels = frozenset()
    for r in nbhds.values():
        if r <= x:
            out |= r
    return out


def yao3_upper(universe: Sequence[str], nbhds: Mapping[str, Labels], x: Labels) -> Labels:
    whole = frozenset(universe)
    return whole - yao3_lower(nbhds, whole - x)


def yao4_lower(nbhds: Mapping[str, Labels], x: Labels) -> Labels:
    return frozenset(e for e, r in nbhds.items() if r <= x)


def yao4_upper(nbhds: Mapping[str, Labels], x: Labels) -> Labels:
    return frozenset(e for e, r in nbhds.items() if r & x)


def generate_opens(universe: Sequence[str], subbase: Iterable[Labels]) -> set[Labels]:
    """All opens of the topology a subbase generates, by brute force.

    Bases are all finite intersections of subbase members (the empty
    intersection being the whole universe), opens all unions of base
    members (the empty union being the empty set). Both closures are
    computed as pairwise fixpoints, which is equivalent on finite families.
    """
    whole = frozenset(universe)
    base: set[Labels] = {whole} | {s for s in subbase if s}
    changed = True
    while changed:
        changed = False
        for a in list(base):
            for b in list(base):
                if a & b not in base:
                    base.add(a & b)
                    changed = True
    opens: set[Labels] = {frozenset()} | base
    changed = True
    while changed:
        changed = False
        for a in list(opens):
            for b in list(opens):
                if a | b not in opens:
                    opens.add(a | b)
                    changed = True
    return opens


def interior(opens: Iterable[Labels], x: Labels) -> Labels:
    out: Labels = frozenset()
    for g in opens:
        if g <= x:
            out |= g
    return out


def closure(universe: Sequence[str], opens: Iterable[Labels], x: Labels) -> Labels:
    whole = frozenset(universe)
    out = whole
    for g in opens:
        f = whole - g
        if x <= f:
            out &= f
    return out


def pairs_to_neighborhoods(
    universe: Sequence[str], pairs: Iterable[Sequence[str]]
) -> dict[str, Labels]:
    nbhds: dict[str, set[str]] = {e: set() for e in universe}
    for x, y in pairs:
        nbhds[x].add(y)
    return {e: frozenset(ys) for e, ys in nbhds.items()}
