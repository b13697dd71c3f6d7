import itertools

import pytest
from hypothesis import given, strategies as st

from hallmass.partitions import (
    Partition,
    conjugate,
    count_partitions_constrained,
    enumerate_by_square_sum,
    enumerate_partitions,
    enumerate_partitions_constrained,
    is_capable,
    iter_partitions,
    iter_partitions_constrained,
    partition_count,
    partition_counts,
)


def brute_partitions(n):
    """All weakly decreasing tuples summing to n, by exhaustive recursion."""
    if n == 0:
        return {()}
    out = set()
    for first in range(1, n + 1):
        for rest in brute_partitions(n - first):
            out.add(tuple(sorted((first,) + rest, reverse=True)))
    return out


def dp_partition_counts(n):
    """pi(0..n) from the bounded-largest-part table p(m, k) = p(m, k-1) + p(m-k, k)."""
    row = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            row[m] += row[m - k]
    return row


partitions_st = st.lists(st.integers(1, 12), max_size=10).map(
    lambda xs: Partition(sorted(xs, reverse=True)))


class TestPartitionType:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_padded_access(self):
        lam = Partition((3, 1))
        assert [lam.part(j) for j in range(1, 5)] == [3, 1, 0, 0]
        assert lam.size == 4 and lam.length == 2

    def test_empty(self):
        assert Partition().size == 0 and Partition().length == 0

    def test_equal_to_tuple(self):
        assert Partition((2, 1)) == (2, 1)
        assert hash(Partition((2, 1))) == hash((2, 1))


class TestEnumeration:
    def test_zero(self):
        assert enumerate_partitions(0) == [()]

    def test_four(self):
        assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_five(self):
        assert len(enumerate_partitions(5)) == 7

    @pytest.mark.parametrize("n", range(13))
    def test_matches_brute_force(self, n):
        got = enumerate_partitions(n)
        assert len(got) == len(set(got))
        assert set(got) == brute_partitions(n)

    @pytest.mark.parametrize("n", range(1, 25))
    @pytest.mark.parametrize("cap", [1, 2, 3, 5, None])
    def test_iterative_matches_recursive(self, n, cap):
        from hallmass.partitions import _descend
        c = n if cap is None else min(n, cap)
        assert [tuple(p) for p in iter_partitions(n, cap)] == list(_descend(n, c, None, []))

    @pytest.mark.parametrize("n", [6, 10, 15])
    def test_reverse_lexicographic(self, n):
        got = [tuple(p) for p in enumerate_partitions(n)]
        assert got == sorted(got, reverse=True)

    def test_count_matches_pi_up_to_60(self):
        pi = partition_counts(60)
        for n in range(61):
            assert sum(1 for _ in iter_partitions(n)) == pi[n]


class TestConstrained:
    def test_max_part(self):
        assert enumerate_partitions_constrained(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_first_two_equal(self):
        assert enumerate_partitions_constrained(4, first_k_equal=2) == [(2, 2), (1, 1, 1, 1)]

    def test_first_two_equal_unreachable(self):
        assert enumerate_partitions_constrained(1, first_k_equal=2) == []

    def test_empty_satisfies_every_class(self):
        for k in range(5):
            assert enumerate_partitions_constrained(0, first_k_equal=k) == [()]

    @pytest.mark.parametrize("n", range(0, 14))
    @pytest.mark.parametrize("max_part", [None, 0, 1, 2, 3, 7])
    @pytest.mark.parametrize("max_length", [None, 0, 1, 2, 4])
    @pytest.mark.parametrize("k", [None, 1, 2, 3])
    def test_agrees_with_filter(self, n, max_part, max_length, k):
        def keep(lam):
            lam = Partition(lam)
            if max_part is not None and lam.part(1) > max_part:
                return False
            if max_length is not None and lam.length > max_length:
                return False
            if k and lam.part(1) != lam.part(k):
                return False
            return True

        expected = [lam for lam in enumerate_partitions(n) if keep(lam)]
        assert enumerate_partitions_constrained(n, max_part, max_length, k) == expected
        if max_length is None:
            assert count_partitions_constrained(n, max_part, k) == len(expected)

    def test_negative_constraint_rejected(self):
        with pytest.raises(ValueError):
            enumerate_partitions_constrained(3, max_part=-1)


class TestSquareSum:
    def test_zero(self):
        assert enumerate_by_square_sum(0) == [()]

    def test_two(self):
        assert sorted(enumerate_by_square_sum(2)) == sorted([(), (1,), (1, 1)])

    def test_five(self):
        # (1,1,1,1) and (1,1,1,1,1) have square sums 4 and 5
        expected = [(), (1,), (1, 1), (1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 1, 1), (2,), (2, 1)]
        assert sorted(enumerate_by_square_sum(5)) == sorted(expected)

    @pytest.mark.parametrize("limit", range(0, 26))
    def test_matches_filter(self, limit):
        # sum mu_i^2 >= sum mu_i, so sizes beyond limit never qualify
        expected = {lam for n in range(limit + 1) for lam in iter_partitions(n)
                    if sum(v * v for v in lam) <= limit}
        got = enumerate_by_square_sum(limit)
        assert len(got) == len(set(got))
        assert set(got) == expected


class TestConjugate:
    def test_examples(self):
        assert conjugate(()) == ()
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate((2, 1)) == (2, 1)

    def test_involution_exhaustive_to_40(self):
        for n in range(41):
            for lam in iter_partitions(n):
                mu = conjugate(lam)
                assert mu.size == n
                if lam:
                    assert mu.length == lam[0]
                assert conjugate(mu) == lam

    @given(partitions_st)
    def test_column_counts(self, lam):
        mu = conjugate(lam)
        for j in range(1, lam.part(1) + 1):
            assert mu.part(j) == sum(1 for v in lam if v >= j)


class TestPartitionCount:
    def test_examples(self):
        assert partition_count(0) == 1
        assert partition_count(4) == 5

    def test_100_two_methods(self):
        assert partition_count(100) == dp_partition_counts(100)[100] == 190569292

    def test_pentagonal_matches_dp_to_2000(self):
        assert partition_counts(2000) == dp_partition_counts(2000)

    def test_negative(self):
        with pytest.raises(ValueError):
            partition_count(-1)


class TestCapable:
    def test_examples(self):
        assert is_capable(Partition((2, 2, 1)))
        assert not is_capable(Partition((3, 1)))
        assert is_capable(Partition(()))

    def test_single_part_not_capable(self):
        assert not is_capable(Partition((1,)))

    def test_duality_count(self):
        pi = partition_counts(60)
        for n in range(1, 61):
            capable = list(iter_partitions_constrained(n, first_k_equal=2))
            assert all(is_capable(lam) for lam in capable)
            assert len(capable) == pi[n] - pi[n - 1]

    @pytest.mark.parametrize("n", range(1, 19))
    def test_duality_by_direct_filter(self, n):
        count = sum(1 for lam in iter_partitions(n) if is_capable(lam))
        assert count == partition_count(n) - partition_count(n - 1)

    @given(partitions_st)
    def test_capable_iff_conjugate_has_no_part_one_gap(self, lam):
        # lam_1 == lam_2 exactly when the conjugate's smallest part is >= 2
        mu = conjugate(lam)
        assert is_capable(lam) == (not mu or mu[-1] >= 2)
