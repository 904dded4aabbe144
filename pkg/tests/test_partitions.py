import pytest
from hypothesis import given, strategies as st

from fockr import partitions as pt


def test_enumeration_order():
    assert pt.enumerate_partitions(0) == ((),)
    assert pt.enumerate_partitions(2) == ((2,), (1, 1))
    assert pt.enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


@pytest.mark.parametrize("w, n", [(0, 1), (1, 2), (2, 5), (3, 10), (4, 20), (5, 36)])
def test_pair_counts(w, n):
    assert len(pt.enumerate_pairs(w)) == n


def test_pairs_weight_one_order():
    assert pt.enumerate_pairs(1) == (((1,), ()), ((), (1,)))


def test_multiset_ops():
    assert pt.union((2, 1), (1,)) == (2, 1, 1)
    assert pt.setminus((2, 1, 1), (1,)) == (2, 1)
    assert pt.intersect((3, 1, 1), (1, 1, 1)) == (1, 1)
    assert pt.is_subpartition((1, 1), (2, 1, 1))
    assert not pt.is_subpartition((2, 2), (2, 1, 1))
    with pytest.raises(ValueError):
        pt.setminus((2,), (1,))


def test_bracket():
    assert pt.bracket((1, 1), (1,)) == 2
    assert pt.bracket((2, 1, 1), (2, 1)) == 2
    assert pt.bracket((2,), (1,)) == 0
    assert pt.mfact((2, 2, 1)) == 2


def test_diagram_vs_multiset_containment():
    # (2) sits inside (2, 1) both ways; (1, 1) sits inside (2, 1) only as a diagram
    assert pt.contains((2, 1), (1, 1))
    assert not pt.is_subpartition((1, 1), (2, 1))
    assert not pt.contains((1, 1), (2,))
    assert pt.proper_subdiagrams((2, 1)) == ((), (1,), (2,), (1, 1))


def test_make_validates():
    assert pt.make([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        pt.make([2, 0])


@given(st.lists(st.integers(1, 4), max_size=5), st.lists(st.integers(1, 4), max_size=5))
def test_union_setminus_inverse(a, b):
    a, b = pt.make(a), pt.make(b)
    assert pt.setminus(pt.union(a, b), b) == a
    assert pt.is_subpartition(pt.intersect(a, b), a)


@given(st.integers(0, 6))
def test_subdiagrams_contained(w):
    for alpha in pt.enumerate_partitions(w):
        subs = pt.subdiagrams(alpha)
        assert subs[0] == () and subs[-1] == alpha
        assert all(pt.contains(alpha, lam) for lam in subs)


def test_json_round_trip():
    assert pt.from_json(pt.to_json((3, 1))) == (3, 1)
