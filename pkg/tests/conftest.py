import pytest

from rtop import (
    BinaryRelation,
    Covering,
    Subbase,
    Topology,
    Universe,
    covering_from_topology,
    relation_from_covering,
)


@pytest.fixture
def u4() -> Universe:
    return Universe("abcd")


@pytest.fixture
def tau(u4) -> Topology:
    """The 4-element worked topology: opens are {}, {d}, {c,d} and the universe."""
    return Topology.from_subbase(Subbase(u4, [u4.subset("d"), u4.subset("cd")]))


@pytest.fixture
def tau_covering(tau) -> Covering:
    return covering_from_topology(tau)


@pytest.fixture
def tau_relation(tau_covering) -> BinaryRelation:
    return relation_from_covering(tau_covering)


@pytest.fixture
def u3() -> Universe:
    return Universe(["1", "2", "3"])


@pytest.fixture
def chain_relation(u3) -> BinaryRelation:
    """Reflexive but not transitive: r(1)={1,2}, r(2)={2,3}, r(3)={3}."""
    return BinaryRelation.from_neighborhoods(
        u3, {"1": ["1", "2"], "2": ["2", "3"], "3": ["3"]}
    )
