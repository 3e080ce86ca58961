import pytest
from hypothesis import given, strategies as st

from rtop import (
    CapExceededError,
    SetFamily,
    Subset,
    Universe,
    enumerate_powerset,
    intersect_all,
    union_all,
)


def universes(max_n=6):
    return st.integers(1, max_n).map(lambda n: Universe([f"e{i}" for i in range(n)]))


@st.composite
def universe_with_subsets(draw, k=3, max_n=6):
    u = draw(universes(max_n))
    bits = draw(st.lists(st.integers(0, 2**u.size - 1), min_size=k, max_size=k))
    return u, [Subset(u, b) for b in bits]


class TestUniverse:
    def test_labels_and_indexing(self):
        u = Universe("abcd")
        assert u.size == 4
        assert u.labels == ("a", "b", "c", "d")
        assert u.index("c") == 2
        assert u.label(3) == "d"
        assert "b" in u and "z" not in u

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Universe([])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            Universe(["a", "b", "a"])

    def test_rejects_empty_label(self):
        with pytest.raises(ValueError):
            Universe(["a", ""])

    def test_doc_round_trip(self):
        u = Universe("abcd")
        assert Universe.from_doc(u.to_doc()) == u


class TestSubsetAlgebra:
    def test_complement_examples(self):
        u = Universe("abcd")
        assert u.subset("ab").complement() == u.subset("cd")
        assert u.empty().complement() == u.full()
        assert u.full().complement() == u.empty()

    def test_union_and_intersect_examples(self):
        u = Universe("abcd")
        assert union_all(u, [u.subset("d"), u.subset("cd")]) == u.subset("cd")
        assert intersect_all(u, []) == u.full()
        assert intersect_all(u, [u.subset("cd"), u.subset("d")]) == u.subset("d")

    def test_is_subset_examples(self):
        u = Universe("abcd")
        assert u.subset("d").issubset(u.subset("cd"))
        assert u.subset("ab").issubset(u.subset("ab"))
        assert not u.subset("cd").issubset(u.subset("d"))

    def test_mixed_universes_rejected(self):
        a = Universe("ab")
        b = Universe("xy")
        with pytest.raises(ValueError):
            a.full() | b.full()
        with pytest.raises(ValueError):
            union_all(a, [b.empty()])

    def test_defining_property_of_complement(self):
        u = Universe("abcd")
        x = u.subset("bd")
        assert x | x.complement() == u.full()
        assert x & x.complement() == u.empty()

    def test_iteration_and_membership(self):
        u = Universe("abcd")
        x = u.subset("db")
        assert list(x) == ["b", "d"]
        assert "d" in x and "a" not in x
        assert len(x) == 2
        assert x.to_labels() == ["b", "d"]

    def test_bits_beyond_universe_rejected(self):
        u = Universe("ab")
        with pytest.raises(ValueError):
            Subset(u, 0b100)

    @given(universe_with_subsets())
    def test_de_morgan(self, uw):
        u, xs = uw
        assert union_all(u, xs).complement() == intersect_all(u, [x.complement() for x in xs])
        assert intersect_all(u, xs).complement() == union_all(u, [x.complement() for x in xs])

    @given(universe_with_subsets(k=1))
    def test_complement_involution(self, uw):
        _, (x,) = uw
        assert x.complement().complement() == x


class TestPowerset:
    def test_order_for_two_elements(self):
        u = Universe(["e0", "e1"])
        assert [s.to_labels() for s in enumerate_powerset(u)] == [
            [],
            ["e0"],
            ["e1"],
            ["e0", "e1"],
        ]

    def test_count_is_two_to_the_n(self):
        u = Universe("abcd")
        subsets = list(enumerate_powerset(u))
        assert len(subsets) == 16
        assert len({s.bits for s in subsets}) == 16

    def test_cap(self):
        u = Universe([f"e{i}" for i in range(21)])
        with pytest.raises(CapExceededError):
            next(enumerate_powerset(u))


class TestSetFamily:
    def test_dedup_and_canonical_order(self):
        u = Universe("abcd")
        fam = SetFamily(u, [u.subset("cd"), u.subset("d"), u.subset("cd"), u.empty()])
        assert [m.bits for m in fam] == [0b0000, 0b1000, 0b1100]

    def test_serialization_round_trip_is_identical(self):
        u = Universe("abcd")
        fam = SetFamily(u, [u.subset("ab"), u.full(), u.subset("b")])
        again = SetFamily.from_doc(u, fam.to_doc())
        assert again == fam
        assert [m.bits for m in again] == [m.bits for m in fam]

    def test_members_share_universe(self):
        u = Universe("ab")
        other = Universe("xy")
        with pytest.raises(ValueError):
            SetFamily(u, [other.full()])

    @given(universe_with_subsets(k=4))
    def test_round_trip_property(self, uw):
        u, xs = uw
        fam = SetFamily(u, xs)
        assert SetFamily.from_doc(u, fam.to_doc()) == fam
