import itertools
import math

import pytest

from mvlab.errors import DomainError
from mvlab.subsets import (
    KSubset,
    colex_rank,
    colex_unrank,
    k_subset_masks,
    k_subsets_of_mask,
    mask_of,
    members_of,
)


def test_mask_members_round_trip():
    for members in ([1], [2, 5], [1, 2, 3], [4, 7, 9]):
        m = mask_of(members, 9)
        assert members_of(m) == tuple(members)


def test_mask_of_rejects_out_of_range():
    with pytest.raises(DomainError):
        mask_of([0], 5)
    with pytest.raises(DomainError):
        mask_of([6], 5)
    assert mask_of([2, 2], 5) == mask_of([2], 5)  # sets collapse duplicates


def test_k_subset_masks_enumeration():
    for n in range(1, 9):
        for k in range(0, n + 1):
            masks = list(k_subset_masks(n, k))
            assert len(masks) == math.comb(n, k)
            assert all(m.bit_count() == k for m in masks)
            assert masks == sorted(masks)
            assert len(set(masks)) == len(masks)


def test_colex_rank_unrank_inverse():
    for n in range(1, 10):
        for k in range(0, n + 1):
            for r, m in enumerate(k_subset_masks(n, k)):
                assert colex_rank(m) == r
                assert colex_unrank(r, k) == m


def test_colex_order_matches_reversed_tuple_order():
    # colex on masks = lexicographic on reversed member tuples
    n, k = 7, 3
    tuples = sorted(itertools.combinations(range(1, n + 1), k),
                    key=lambda t: t[::-1])
    masks = [mask_of(list(t), n) for t in tuples]
    assert masks == list(k_subset_masks(n, k))


def test_k_subsets_of_mask():
    base = mask_of([2, 3, 5, 8], 8)
    subs = list(k_subsets_of_mask(base, 2))
    assert len(subs) == 6
    assert all(s & base == s and s.bit_count() == 2 for s in subs)


def test_ksubset_operations():
    a = KSubset.from_members([1, 3], 5)
    b = KSubset.from_members([2, 4], 5)
    c = KSubset.from_members([3, 5], 5)
    assert a.size == 2
    assert a.members() == (1, 3)
    assert a.complement().members() == (2, 4, 5)
    assert a.isdisjoint(b)
    assert not a.isdisjoint(c)
    assert a.intersection_size(c) == 1
    assert KSubset(5, a.bits) == a
