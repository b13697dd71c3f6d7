"""Integer partitions: the types of finite abelian p-groups.

A partition ``lam = (l1, ..., lr)`` with ``l1 >= ... >= lr >= 1`` names the
group ``Z/p^l1 + ... + Z/p^lr``.  Parts are read with zero padding, so
``lam.part(j) == 0`` for ``j > len(lam)``; under that convention the empty
partition (the trivial group) satisfies every "first k parts equal"
condition, including capability.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import isqrt


class Partition(tuple):
    """Immutable weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(parts)
        for i, v in enumerate(parts):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if i and parts[i - 1] < v:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> Partition:
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, j: int) -> int:
        """1-based padded access: ``part(j) == 0`` beyond the length."""
        if j < 1:
            raise IndexError("parts are indexed from 1")
        return self[j - 1] if j <= len(self) else 0

    def square_sum(self) -> int:
        return sum(v * v for v in self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _descend(n: int, cap: int, max_length: int | None, prefix: list[int]) -> Iterator[tuple]:
    if n == 0:
        yield tuple(prefix)
        return
    if max_length is not None and len(prefix) >= max_length:
        return
    for first in range(min(n, cap), 0, -1):
        prefix.append(first)
        yield from _descend(n - first, first, max_length, prefix)
        prefix.pop()


def _zs1(n: int, cap: int) -> Iterator[tuple]:
    """Zoghbi-Stojmenovic ZS1: partitions of n >= 1 with parts <= cap,
    in reverse-lexicographic order."""
    x = [1] * (n + 1)  # 1-based; slots past m hold 1
    q, rem = divmod(n, cap)
    for j in range(1, q + 1):
        x[j] = cap
    m = q
    if rem:
        m += 1
        x[m] = rem
    # h = index of the last part greater than 1
    h = m if x[m] > 1 else (q if cap > 1 else 0)
    yield tuple(x[1:m + 1])
    while h:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1:m + 1])


def iter_partitions(n: int, max_part: int | None = None,
                    max_length: int | None = None) -> Iterator[Partition]:
    """Lazily yield partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(n, max_part)
    if max_length is None and n > 0:
        if cap < 1:
            return
        for parts in _zs1(n, cap):
            yield Partition._trusted(parts)
        return
    for parts in _descend(n, cap, max_length, []):
        yield Partition._trusted(parts)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first part first."""
    return list(iter_partitions(n))


def iter_partitions_constrained(n: int, max_part: int | None = None,
                                max_length: int | None = None,
                                first_k_equal: int | None = None) -> Iterator[Partition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    for name, v in (("max_part", max_part), ("max_length", max_length),
                    ("first_k_equal", first_k_equal)):
        if v is not None and v < 0:
            raise ValueError(f"{name} must be nonnegative")
    if not first_k_equal or first_k_equal == 1 or n == 0:
        yield from iter_partitions(n, max_part, max_length)
        return
    k = first_k_equal
    if max_length is not None and max_length < k:
        return
    top = n // k if max_part is None else min(n // k, max_part)
    rest_len = None if max_length is None else max_length - k
    # a block of k equal largest parts followed by any partition into parts <= a
    for a in range(top, 0, -1):
        head = (a,) * k
        for tail in iter_partitions(n - k * a, a, rest_len):
            yield Partition._trusted(head + tail)


def enumerate_partitions_constrained(n: int, max_part: int | None = None,
                                     max_length: int | None = None,
                                     first_k_equal: int | None = None) -> list[Partition]:
    """Partitions of ``n`` meeting every supplied constraint.

    ``first_k_equal=k`` keeps partitions with ``part(1) == part(k)`` under
    zero padding; for ``n > 0`` this forces at least ``k`` parts.
    """
    return list(iter_partitions_constrained(n, max_part, max_length, first_k_equal))


def count_partitions_constrained(n: int, max_part: int | None = None,
                                 first_k_equal: int | None = None) -> int:
    """Number of partitions counted by :func:`enumerate_partitions_constrained`.

    Counts by a bounded-part table instead of listing, which keeps class
    counts for n in the hundreds cheap.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(n, max_part)
    bounded = _bounded_part_table(n, cap)
    if not first_k_equal or first_k_equal == 1 or n == 0:
        return bounded[cap][n]
    k = first_k_equal
    return sum(bounded[a][n - k * a] for a in range(1, min(n // k, cap) + 1))


def _bounded_part_table(n: int, cap: int) -> list[list[int]]:
    """``table[a][m]`` = number of partitions of m into parts <= a."""
    table = [[1] + [0] * n]
    for a in range(1, cap + 1):
        row = list(table[-1])
        for m in range(a, n + 1):
            row[m] += row[m - a]
        table.append(row)
    return table


def enumerate_by_square_sum(limit: int) -> list[Partition]:
    """Every partition ``mu`` (of any size) with ``sum(mu_i**2) <= limit``."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    out = []

    def walk(prefix, cap, budget):
        out.append(Partition._trusted(tuple(prefix)))
        for v in range(1, cap + 1):
            sq = v * v
            if sq > budget:
                break
            prefix.append(v)
            walk(prefix, v, budget - sq)
            prefix.pop()

    walk([], isqrt(limit), limit)
    return out


def conjugate(lam: Iterable[int]) -> Partition:
    """Column lengths of the Young diagram: ``mu_j = #{i : lam_i >= j}``."""
    lam = tuple(lam)
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(tuple(sum(1 for v in lam if v >= j)
                                    for j in range(1, lam[0] + 1)))


def partition_counts(n: int) -> list[int]:
    """``[pi(0), ..., pi(n)]`` from Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            g2 = g1 + k
            term = p[m - g1] + (p[m - g2] if g2 <= m else 0)
            total += term if k % 2 else -term
            k += 1
        p[m] = total
    return p


def partition_count(n: int) -> int:
    """pi(n), the number of partitions of n."""
    return partition_counts(n)[n]


def is_capable(lam: Partition) -> bool:
    """Two equal largest parts (padded); the empty partition qualifies."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return lam.part(1) == lam.part(2)
