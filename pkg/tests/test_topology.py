import random

import pytest
from hypothesis import given, strategies as st

from rtop import (
    BinaryRelation,
    CapExceededError,
    Subbase,
    Subset,
    Topology,
    Universe,
    check_family_axioms,
    family_is_topology,
    generate_from_subbase,
    subbase_from_relation,
    topologies_equal,
)


@st.composite
def topologies_with_subsets(draw, max_n=6, k=2):
    n = draw(st.integers(1, max_n))
    u = Universe([f"e{i}" for i in range(n)])
    members = draw(st.lists(st.integers(1, 2**n - 1), min_size=0, max_size=2 * n))
    t = Topology.from_subbase(Subbase(u, [Subset(u, b) for b in members]))
    xs = draw(st.lists(st.integers(0, 2**n - 1), min_size=k, max_size=k))
    return t, [Subset(u, b) for b in xs]


class TestGeneration:
    def test_worked_subbase(self, u4):
        t = generate_from_subbase(Subbase(u4, [u4.subset("d"), u4.subset("cd")]))
        assert t.opens().to_doc() == [[], ["d"], ["c", "d"], ["a", "b", "c", "d"]]

    def test_empty_subbase_gives_indiscrete(self):
        u = Universe("abc")
        t = generate_from_subbase(Subbase(u))
        assert t == Topology.indiscrete(u)
        assert t.opens().to_doc() == [[], ["a", "b", "c"]]

    def test_singletons_give_discrete(self):
        u = Universe("abc")
        t = generate_from_subbase(Subbase(u, [u.singleton(x) for x in "abc"]))
        assert t == Topology.discrete(u)
        for x in "abc":
            assert t.min_nbhd(x) == u.singleton(x)

    def test_monotone_refinement(self):
        rng = random.Random(21)
        for _ in range(30):
            n = rng.randint(1, 6)
            u = Universe([f"e{i}" for i in range(n)])
            first = [Subset(u, rng.randrange(1, 2**n)) for _ in range(rng.randint(0, n))]
            extra = [Subset(u, rng.randrange(1, 2**n)) for _ in range(rng.randint(0, n))]
            t1 = Topology.from_subbase(Subbase(u, first))
            t2 = Topology.from_subbase(Subbase(u, first + extra))
            for g in t1.opens():
                assert t2.is_open(g)

    def test_specialization_consistency_enforced(self):
        u3 = Universe("xyz")
        # y lies in N(x) but N(y) is not contained in N(x)
        with pytest.raises(ValueError, match="inconsistent"):
            Topology.from_min_neighborhoods(
                u3, {"x": ["x", "y"], "y": ["y", "z"], "z": ["z"]}
            )
        u2 = Universe("ab")
        with pytest.raises(ValueError, match="must contain"):
            Topology(u2, [0b10, 0b10])

    def test_preorder_neighborhoods_are_minimal_opens(self):
        rng = random.Random(2)
        for _ in range(30):
            n = rng.randint(1, 6)
            u = Universe([f"e{i}" for i in range(n)])
            rows = []
            for i in range(n):
                row = 1 << i
                for j in range(n):
                    if rng.random() < 0.3:
                        row |= 1 << j
                rows.append(row)
            # transitive closure, generator-style
            changed = True
            while changed:
                changed = False
                for i in range(n):
                    reach = rows[i]
                    bits = rows[i]
                    while bits:
                        low = bits & -bits
                        reach |= rows[low.bit_length() - 1]
                        bits ^= low
                    if reach != rows[i]:
                        rows[i] = reach
                        changed = True
            rel = BinaryRelation(u, rows)
            t = Topology.from_subbase(subbase_from_relation(rel))
            for x in u.labels:
                assert t.min_nbhd(x) == rel.right(x)


class TestMaterialization:
    def test_worked_min_neighborhoods(self, tau, u4):
        assert tau.min_nbhd("a") == u4.full()
        assert tau.min_nbhd("b") == u4.full()
        assert tau.min_nbhd("c") == u4.subset("cd")
        assert tau.min_nbhd("d") == u4.subset("d")

    def test_materialize_from_min_neighborhood_map(self, tau, u4):
        rebuilt = Topology.from_min_neighborhoods(
            u4,
            {"a": "abcd", "b": "abcd", "c": "cd", "d": "d"},
        )
        assert topologies_equal(rebuilt, tau)
        assert rebuilt.opens().to_doc() == [[], ["d"], ["c", "d"], ["a", "b", "c", "d"]]

    def test_discrete_counts(self):
        u = Universe("abc")
        assert len(Topology.discrete(u).opens()) == 8
        assert len(Topology.indiscrete(u).opens()) == 2

    def test_cap_enforced(self):
        u = Universe("abcdefgh")
        t = Topology.discrete(u)
        with pytest.raises(CapExceededError):
            t.opens(max_opens=100)

    def test_axioms_hold_on_materialized_families(self):
        rng = random.Random(17)
        for _ in range(25):
            n = rng.randint(1, 6)
            u = Universe([f"e{i}" for i in range(n)])
            members = [Subset(u, rng.randrange(1, 2**n)) for _ in range(rng.randint(0, 2 * n))]
            t = Topology.from_subbase(Subbase(u, members))
            opens = t.opens()
            assert check_family_axioms(opens) == []
            assert family_is_topology(opens)
            for g in opens:
                assert t.is_open(g)

    def test_openness_criterion_matches_family(self, tau, u4):
        opens = {m.bits for m in tau.opens()}
        for bits in range(16):
            s = Subset(u4, bits)
            assert tau.is_open(s) == (bits in opens)


class TestInteriorClosureBoundary:
    def test_worked_values(self, tau, u4):
        x = u4.subset("ab")
        assert tau.interior(x) == u4.empty()
        assert tau.closure(x) == u4.subset("ab")
        assert tau.boundary(x) == u4.subset("ab")
        assert not tau.is_exact(x)

    def test_interior_of_universe_and_open_sets(self, tau, u4):
        assert tau.interior(u4.full()) == u4.full()
        assert tau.interior(u4.subset("cd")) == u4.subset("cd")

    def test_closure_trivial_cases(self, tau, u4):
        assert tau.closure(u4.empty()) == u4.empty()
        assert tau.closure(u4.subset("d")) == u4.full()

    def test_whole_universe_is_exact(self, tau, u4):
        assert tau.boundary(u4.full()) == u4.empty()
        assert tau.is_exact(u4.full())

    def test_discrete_everything_exact(self):
        u = Universe("abc")
        t = Topology.discrete(u)
        for bits in range(8):
            assert t.is_exact(Subset(u, bits))

    @given(topologies_with_subsets())
    def test_kuratowski_laws(self, tw):
        t, (x, y) = tw
        u = t.universe
        assert t.closure(u.empty()) == u.empty()
        assert x.issubset(t.closure(x))
        assert t.closure(t.closure(x)) == t.closure(x)
        assert t.closure(x | y) == t.closure(x) | t.closure(y)

    @given(topologies_with_subsets(k=1))
    def test_interior_closure_duality(self, tw):
        t, (x,) = tw
        assert t.interior(x) == t.closure(x.complement()).complement()

    @given(topologies_with_subsets(k=1))
    def test_interior_is_largest_open_subset(self, tw):
        t, (x,) = tw
        inner = t.interior(x)
        assert t.is_open(inner) and inner.issubset(x)
        for g in t.opens():
            if g.issubset(x):
                assert g.issubset(inner)


class TestEquality:
    def test_same_subbase_twice(self, u4):
        s = Subbase(u4, [u4.subset("d"), u4.subset("cd")])
        assert topologies_equal(Topology.from_subbase(s), Topology.from_subbase(s))

    def test_duplicate_members_ignored(self):
        u = Universe("ab")
        t1 = Topology.from_subbase(Subbase(u, [u.subset("a"), u.subset("ab")]))
        t2 = Topology.from_subbase(
            Subbase(u, [u.subset("a"), u.subset("ab"), u.subset("a")])
        )
        assert topologies_equal(t1, t2)

    def test_discrete_vs_indiscrete(self):
        u = Universe("ab")
        assert not topologies_equal(Topology.discrete(u), Topology.indiscrete(u))

    def test_mixed_universes_rejected(self):
        with pytest.raises(ValueError):
            topologies_equal(
                Topology.discrete(Universe("ab")), Topology.discrete(Universe("xy"))
            )


class TestSubbaseFromRelation:
    def test_identity_gives_discrete(self):
        u = Universe("abc")
        t = Topology.from_subbase(subbase_from_relation(BinaryRelation.identity(u)))
        assert t == Topology.discrete(u)

    def test_full_gives_indiscrete(self):
        u = Universe("abc")
        t = Topology.from_subbase(subbase_from_relation(BinaryRelation.full(u)))
        assert t == Topology.indiscrete(u)

    def test_worked_neighborhoods(self, tau_relation, u4, tau):
        sb = subbase_from_relation(tau_relation)
        assert sb.members.to_doc() == [["d"], ["c", "d"], ["a", "b", "c", "d"]]
        assert topologies_equal(Topology.from_subbase(sb), tau)

    def test_empty_neighborhoods_excluded(self):
        u = Universe(["1", "2"])
        rel = BinaryRelation.from_pairs(u, [("1", "2")])  # r(2) is empty
        sb = subbase_from_relation(rel)
        assert sb.members.to_doc() == [["2"]]
