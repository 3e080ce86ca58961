import random

import pytest

from rtop import (
    BinaryRelation,
    Covering,
    SetFamily,
    Subset,
    Universe,
    covering_from_relation,
    covering_from_topology,
    intersect_all,
    relation_from_covering,
    transform_F,
)


def random_covering(rng, n):
    u = Universe([f"e{i}" for i in range(n)])
    sets = [Subset(u, rng.randrange(1, 2**n)) for _ in range(rng.randint(1, 2 * n))]
    covered = 0
    for s in sets:
        covered |= s.bits
    for i in range(n):
        if not covered >> i & 1:
            sets.append(Subset(u, 1 << i))
    return Covering(u, sets)


class TestConstruction:
    def test_rejects_empty_member(self):
        u = Universe("ab")
        with pytest.raises(ValueError, match="non-empty"):
            Covering(u, [u.full(), u.empty()])

    def test_drop_empty_reconciles_topology_families(self):
        u = Universe("ab")
        cov = Covering(u, [u.full(), u.empty()], drop_empty=True)
        assert len(cov) == 1

    def test_rejects_non_cover(self):
        u = Universe("abc")
        with pytest.raises(ValueError, match="missing"):
            Covering(u, [u.subset("ab")])

    def test_doc_round_trip(self, tau_covering):
        doc = tau_covering.to_doc()
        assert doc["sets"] == [["d"], ["c", "d"], ["a", "b", "c", "d"]]
        assert Covering.from_doc(doc) == tau_covering


class TestMinimalDescription:
    def test_topology_covering(self, tau_covering, u4):
        assert tau_covering.minimal_description("c").to_doc() == [["c", "d"]]
        assert tau_covering.minimal_description("a").to_doc() == [["a", "b", "c", "d"]]

    def test_partition_block(self):
        u = Universe("abcd")
        cov = Covering(u, [u.subset("ab"), u.subset("cd")])
        for x in "ab":
            assert cov.minimal_description(x).to_doc() == [["a", "b"]]

    def test_overlap_gives_two_minimal_members(self):
        u = Universe(["1", "2", "3"])
        cov = Covering(u, [u.subset(["1", "2"]), u.subset(["2", "3"]), u.full()])
        assert cov.minimal_description("2").to_doc() == [["1", "2"], ["2", "3"]]

    def test_unknown_element(self, tau_covering):
        with pytest.raises(ValueError, match="unknown element"):
            tau_covering.minimal_description("z")


class TestNeighborhood:
    def test_worked_values(self, tau_covering, u4):
        assert tau_covering.neighborhood("c") == u4.subset("cd")
        assert tau_covering.neighborhood("d") == u4.subset("d")

    def test_singleton_covering(self):
        u = Universe("abc")
        cov = Covering(u, [u.singleton(x) for x in "abc"])
        for x in "abc":
            assert cov.neighborhood(x) == u.singleton(x)

    def test_invariants_on_random_covers(self):
        rng = random.Random(5)
        for _ in range(40):
            cov = random_covering(rng, rng.randint(1, 6))
            u = cov.universe
            for x in u.labels:
                n_x = cov.neighborhood(x)
                md = cov.minimal_description(x)
                assert x in n_x
                assert len(md) >= 1
                for k in md:
                    assert n_x.issubset(k)
                assert n_x == intersect_all(u, md)


class TestUnary:
    def test_partition_is_unary(self):
        u = Universe("abcd")
        assert Covering(u, [u.subset("ab"), u.subset("cd")]).is_unary()

    def test_overlap_chain_is_not(self):
        u = Universe(["1", "2", "3"])
        cov = Covering(u, [u.subset(["1", "2"]), u.subset(["2", "3"]), u.full()])
        assert not cov.is_unary()

    def test_topology_coverings_are_unary(self, tau_covering):
        assert tau_covering.is_unary()


class TestTransform:
    def test_worked_value(self, tau_covering):
        assert transform_F(tau_covering).members.to_doc() == [
            ["d"],
            ["c", "d"],
            ["a", "b", "c", "d"],
        ]

    def test_partition_is_fixed_point(self):
        u = Universe("abcd")
        cov = Covering(u, [u.subset("ab"), u.subset("cd")])
        assert transform_F(cov) == cov

    def test_idempotent_on_random_covers(self):
        rng = random.Random(9)
        for _ in range(40):
            cov = random_covering(rng, rng.randint(1, 6))
            once = transform_F(cov)
            assert transform_F(once) == once


class TestCoveringFromRelation:
    def test_identity_gives_singletons(self):
        u = Universe("abc")
        cov = covering_from_relation(BinaryRelation.identity(u))
        assert cov.members.to_doc() == [["a"], ["b"], ["c"]]

    def test_topology_neighborhood_rows(self, tau_relation):
        cov = covering_from_relation(tau_relation)
        assert cov.members.to_doc() == [["d"], ["c", "d"], ["a", "b", "c", "d"]]

    def test_rejects_non_transitive(self, chain_relation):
        with pytest.raises(ValueError, match="transitive"):
            covering_from_relation(chain_relation)

    def test_rejects_non_reflexive(self):
        u = Universe(["1", "2"])
        rel = BinaryRelation.from_pairs(u, [("1", "2")])
        with pytest.raises(ValueError, match="reflexive"):
            covering_from_relation(rel)

    def test_result_is_unary_with_md_r(self):
        rng = random.Random(3)
        for _ in range(30):
            cov = random_covering(rng, rng.randint(1, 6))
            rel = relation_from_covering(cov)
            cov2 = covering_from_relation(rel)
            assert cov2.is_unary()
            for x in cov.universe.labels:
                assert cov2.minimal_description(x) == SetFamily(
                    cov.universe, [rel.right(x)]
                )

    def test_round_trip_for_unary_coverings(self, tau_covering):
        # relation then covering reproduces exactly the neighborhood family
        rel = relation_from_covering(tau_covering)
        assert covering_from_relation(rel) == transform_F(tau_covering)


def test_covering_from_topology_drops_empty(tau):
    cov = covering_from_topology(tau)
    assert cov.members.to_doc() == [["d"], ["c", "d"], ["a", "b", "c", "d"]]
