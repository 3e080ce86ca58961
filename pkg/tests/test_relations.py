import random

import pytest
from hypothesis import given, strategies as st

from rtop import BinaryRelation, Covering, Subset, Universe, relation_from_covering


@st.composite
def relations(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    u = Universe([f"e{i}" for i in range(n)])
    rows = draw(st.lists(st.integers(0, 2**n - 1), min_size=n, max_size=n))
    return BinaryRelation(u, rows)


class TestNeighborhoods:
    def test_identity_left_is_singleton(self):
        u = Universe("abc")
        rel = BinaryRelation.identity(u)
        for x in "abc":
            assert rel.left(x) == u.singleton(x)
            assert rel.right(x) == u.singleton(x)

    def test_full_relation_left_is_universe(self):
        u = Universe("abc")
        rel = BinaryRelation.full(u)
        assert rel.left("b") == u.full()

    def test_left_of_topology_induced_relation(self, tau_relation, u4):
        # r(a)=r(b)=U, r(c)={c,d}, r(d)={d}; inverting gives l(a)={a,b}
        assert tau_relation.left("a") == u4.subset("ab")

    @given(relations())
    def test_left_right_adjoint(self, rel):
        for x in rel.universe.labels:
            for y in rel.universe.labels:
                assert (y in rel.right(x)) == (x in rel.left(y))

    @given(relations())
    def test_inverse_involution(self, rel):
        assert rel.inverse().inverse() == rel

    def test_inverse_of_single_pair(self):
        u = Universe(["1", "2"])
        rel = BinaryRelation.from_pairs(u, [("1", "2")])
        assert rel.inverse().pairs() == [("2", "1")]

    def test_inverse_of_identity(self):
        u = Universe("abc")
        assert BinaryRelation.identity(u).inverse() == BinaryRelation.identity(u)


class TestStructuralProperties:
    def test_identity_is_equivalence(self):
        rel = BinaryRelation.identity(Universe("abc"))
        assert rel.is_reflexive()
        assert rel.is_symmetric()
        assert rel.is_transitive()
        assert rel.is_equivalence()

    def test_single_arrow(self):
        u = Universe(["1", "2"])
        rel = BinaryRelation.from_pairs(u, [("1", "2")])
        assert rel.is_transitive()
        assert not rel.is_reflexive()
        assert not rel.is_symmetric()

    def test_chain_not_transitive(self, chain_relation):
        assert chain_relation.is_reflexive()
        assert not chain_relation.is_transitive()


class TestRelationFromCovering:
    def test_partition_gives_equivalence(self):
        u = Universe("abcd")
        cov = Covering(u, [u.subset("ab"), u.subset("cd")])
        rel = relation_from_covering(cov)
        assert rel.right("a") == u.subset("ab")
        assert rel.right("c") == u.subset("cd")
        assert rel.is_equivalence()

    def test_topology_covering_rows(self, tau_covering, u4):
        rel = relation_from_covering(tau_covering)
        assert rel.right("a") == u4.full()
        assert rel.right("b") == u4.full()
        assert rel.right("c") == u4.subset("cd")
        assert rel.right("d") == u4.subset("d")

    def test_overlap_chain_rows(self):
        u = Universe(["1", "2", "3"])
        cov = Covering(u, [u.subset(["1", "2"]), u.subset(["2", "3"]), u.full()])
        rel = relation_from_covering(cov)
        assert rel.right("1") == u.subset(["1", "2"])
        assert rel.right("2") == u.subset(["2"])
        assert rel.right("3") == u.subset(["2", "3"])

    def test_always_yields_preorder(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 6)
            u = Universe([f"e{i}" for i in range(n)])
            sets = [Subset(u, rng.randrange(1, 2**n)) for _ in range(rng.randint(1, 8))]
            covered = 0
            for s in sets:
                covered |= s.bits
            for i in range(n):
                if not covered >> i & 1:
                    sets.append(Subset(u, 1 << i))
            rel = relation_from_covering(Covering(u, sets))
            assert rel.is_reflexive() and rel.is_transitive()


class TestJson:
    def test_round_trip(self):
        u = Universe("ab")
        rel = BinaryRelation.from_pairs(u, [("a", "b"), ("a", "a")])
        doc = rel.to_doc()
        assert doc == {"universe": ["a", "b"], "pairs": [["a", "a"], ["a", "b"]]}
        assert BinaryRelation.from_doc(doc) == rel

    def test_bad_document(self):
        with pytest.raises(ValueError):
            BinaryRelation.from_doc({"universe": ["a"]})

    def test_unknown_element_in_pairs(self):
        with pytest.raises(ValueError, match="unknown element"):
            BinaryRelation.from_doc({"universe": ["a"], "pairs": [["a", "z"]]})
