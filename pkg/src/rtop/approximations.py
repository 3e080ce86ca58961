"""The five lower/upper approximation operator pairs, plus the families of
relationally-null and relationally-reachable subsets.

Each pair is a pure function over an explicitly passed structure. Nothing
here converts between coverings, relations and topologies; those bridges
are separate operations, because the algebraic comparisons the verifier
performs are precisely about which conversions preserve which operators.

Pairs and their structures:

  zhu        covering   lower: union of members inside X
                         upper: lower plus the neighborhoods of the rest of X
  xu_zhang   covering   pointwise through the intersection of the minimal
                         description of each element
  yao3       relation   lower: union of right neighborhoods inside X
                         upper: dual of the lower on the complement
  yao4       relation   pointwise through right neighborhoods
  topo       topology   interior and closure
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import SetFamily, Subset, enumerate_powerset
from .coverings import Covering
from .relations import BinaryRelation
from .topology import Topology

OPERATORS = ("zhu", "xu_zhang", "yao3", "yao4", "topo")


def zhu_lower(cov: Covering, x: Subset) -> Subset:
    """Union of the covering members contained in x."""
    bits = 0
    for m in cov.members:
        if m.bits & ~x.bits == 0:
            bits |= m.bits
    return Subset(cov.universe, bits)


def zhu_upper(cov: Covering, x: Subset) -> Subset:
    """The lower approximation plus the neighborhoods of the points of x
    it does not reach."""
    low = zhu_lower(cov, x).bits
    bits = low
    rest = x.bits & ~low
    while rest:
        lsb = rest & -rest
        bits |= cov.neighborhood_bits(lsb.bit_length() - 1)
        rest ^= lsb
    return Subset(cov.universe, bits)


def xu_zhang_lower(cov: Covering, x: Subset) -> Subset:
    """Points whose minimal-description intersection is contained in x."""
    bits = 0
    for i in range(cov.universe.size):
        if cov.md_meet_bits(i) & ~x.bits == 0:
            bits |= 1 << i
    return Subset(cov.universe, bits)


def xu_zhang_upper(cov: Covering, x: Subset) -> Subset:
    """Points whose minimal-description intersection meets x."""
    bits = 0
    for i in range(cov.universe.size):
        if cov.md_meet_bits(i) & x.bits:
            bits |= 1 << i
    return Subset(cov.universe, bits)


def yao3_lower(rel: BinaryRelation, x: Subset) -> Subset:
    """Union of the right neighborhoods contained in x."""
    bits = 0
    for row in rel.rows:
        if row & ~x.bits == 0:
            bits |= row
    return Subset(rel.universe, bits)


def yao3_upper(rel: BinaryRelation, x: Subset) -> Subset:
    """Complement of the lower approximation of the complement."""
    return yao3_lower(rel, x.complement()).complement()


def yao4_lower(rel: BinaryRelation, x: Subset) -> Subset:
    """Points whose right neighborhood is contained in x."""
    bits = 0
    for i, row in enumerate(rel.rows):
        if row & ~x.bits == 0:
            bits |= 1 << i
    return Subset(rel.universe, bits)


def yao4_upper(rel: BinaryRelation, x: Subset) -> Subset:
    """Points whose right neighborhood meets x."""
    bits = 0
    for i, row in enumerate(rel.rows):
        if row & x.bits:
            bits |= 1 << i
    return Subset(rel.universe, bits)


def topo_lower(topo: Topology, x: Subset) -> Subset:
    return topo.interior(x)


def topo_upper(topo: Topology, x: Subset) -> Subset:
    return topo.closure(x)


def family_G(rel: BinaryRelation) -> SetFamily:
    """All subsets whose pointwise upper approximation is empty."""
    members = []
    for x in enumerate_powerset(rel.universe):
        if not yao4_upper(rel, x):
            members.append(x)
    return SetFamily(rel.universe, members)


def family_H(rel: BinaryRelation) -> SetFamily:
    """The image of the powerset under the pointwise upper approximation."""
    members = []
    for x in enumerate_powerset(rel.universe):
        members.append(yao4_upper(rel, x))
    return SetFamily(rel.universe, members)


@dataclass(frozen=True)
class ApproxResult:
    """Both sides of one operator pair applied to one input set."""

    operator: str
    lower: Subset
    upper: Subset
    input: Subset


def approximate(
    operator: str, structure: Covering | BinaryRelation | Topology, x: Subset
) -> ApproxResult:
    """Evaluate one operator pair against its matching structure."""
    if operator in ("zhu", "xu_zhang"):
        if not isinstance(structure, Covering):
            raise TypeError(f"operator {operator!r} needs a covering")
        pair = (zhu_lower, zhu_upper) if operator == "zhu" else (xu_zhang_lower, xu_zhang_upper)
    elif operator in ("yao3", "yao4"):
        if not isinstance(structure, BinaryRelation):
            raise TypeError(f"operator {operator!r} needs a relation")
        pair = (yao3_lower, yao3_upper) if operator == "yao3" else (yao4_lower, yao4_upper)
    elif operator == "topo":
        if not isinstance(structure, Topology):
            raise TypeError("operator 'topo' needs a topology")
        pair = (topo_lower, topo_upper)
    else:
        raise ValueError(f"unknown operator {operator!r}; expected one of {OPERATORS}")
    lower_fn, upper_fn = pair
    return ApproxResult(operator, lower_fn(structure, x), upper_fn(structure, x), x)
