"""Truncated formal power series with exact rational coefficients.

A :class:`TruncSeries` of order ``N`` stores the coefficients of
``x^0 .. x^N`` as integer numerators over one shared positive denominator,
kept in lowest terms.  Every coefficient read back is a
:class:`fractions.Fraction`.  Binary operations truncate to the smaller
order of their operands.
"""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from math import gcd
from numbers import Rational

from hallmass import _kernel

Coeff = Fraction


class NonUnitSeriesError(ZeroDivisionError):
    """Raised when inverting a series whose constant term is zero."""


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 1:
        return tuple(nums), 1
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g != 1:
        nums = [v // g for v in nums]
        den //= g
    return tuple(nums), den


class TruncSeries:
    __slots__ = ("_nums", "_den")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        """Build from coefficients ``c_0, c_1, ...`` (ints or rationals).

        ``order`` pads with zeros or truncates; it defaults to
        ``len(coeffs) - 1``.
        """
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        values = values[: order + 1] + [Fraction(0)] * (order + 1 - len(values))
        den = 1
        for v in values:
            den = den * v.denominator // gcd(den, v.denominator)
        nums = [v.numerator * (den // v.denominator) for v in values]
        self._nums, self._den = _normalize(nums, den)

    @classmethod
    def _raw(cls, nums, den: int = 1) -> TruncSeries:
        obj = cls.__new__(cls)
        obj._nums, obj._den = _normalize(list(nums), den)
        return obj

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls._raw([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return monomial(0, 1, order)

    @property
    def order(self) -> int:
        return len(self._nums) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(v, d) for v in self._nums)

    @property
    def denominator(self) -> int:
        """Least common denominator of all coefficients."""
        return self._den

    def is_integral(self) -> bool:
        return self._den == 1

    def int_coeffs(self) -> tuple[int, ...]:
        if self._den != 1:
            raise ValueError("series has non-integer coefficients")
        return self._nums

    def __getitem__(self, k: int) -> Fraction:
        return Fraction(self._nums[k], self._den)

    def __len__(self) -> int:
        return len(self._nums)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._nums == other._nums and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._nums, self._den))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{k}" if k else str(c))
        body = " + ".join(terms) or "0"
        return f"TruncSeries({body}, order={self.order})"

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncSeries._raw(self._nums[: order + 1], self._den)

    def shift(self, k: int, order: int | None = None) -> TruncSeries:
        """Multiply by ``x**k``; result order defaults to ``self.order``."""
        if order is None:
            order = self.order
        nums = ([0] * k + list(self._nums))[: order + 1]
        nums += [0] * (order + 1 - len(nums))
        return TruncSeries._raw(nums, self._den)

    def _align(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Rational)):
            return monomial(0, Fraction(other), self.order)
        return NotImplemented

    def __add__(self, other) -> TruncSeries:
        other = self._align(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        da, db = self._den, other._den
        if da == db:
            return TruncSeries._raw([a + b for a, b in zip(self._nums[: n + 1], other._nums)], da)
        den = da * db // gcd(da, db)
        fa, fb = den // da, den // db
        return TruncSeries._raw([a * fa + b * fb for a, b in zip(self._nums[: n + 1], other._nums)], den)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries._raw([-v for v in self._nums], self._den)

    def __sub__(self, other) -> TruncSeries:
        other = self._align(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, (int, Rational)) and not isinstance(other, TruncSeries):
            c = Fraction(other)
            return TruncSeries._raw([v * c.numerator for v in self._nums], self._den * c.denominator)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries._raw(_kernel.conv(self._nums, other._nums, n), self._den * other._den)

    __rmul__ = __mul__

    def invert(self) -> TruncSeries:
        return invert(self)

    def evaluate(self, x0) -> Fraction:
        return evaluate(self, x0)


def monomial(k: int, c, order: int) -> TruncSeries:
    """``c * x**k`` truncated to ``order`` (the zero series when k > order)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    c = Fraction(c)
    nums = [0] * (order + 1)
    if k <= order:
        nums[k] = c.numerator
    return TruncSeries._raw(nums, c.denominator)


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a - b


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def invert(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse up to ``a.order``.

    Uses the direct recurrence ``b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}``.
    """
    if a._nums[0] == 0:
        raise NonUnitSeriesError("non-unit series")
    nums, den = _kernel.inverse(list(a._nums), a.order)
    # (A/d)^-1 = d * A^-1
    return TruncSeries._raw([v * a._den for v in nums], den)


def f_poly(k: int, order: int) -> TruncSeries:
    """``(1 - x)(1 - x^2)...(1 - x^k)`` truncated to ``order``; ``f_0 = 1``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    nums = [0] * (order + 1)
    nums[0] = 1
    for i in range(1, min(k, order) + 1):
        for m in range(order, i - 1, -1):
            nums[m] -= nums[m - i]
    return TruncSeries._raw(nums)


def restricted_product(modulus: int, excluded_residues: Iterable[int], order: int) -> TruncSeries:
    """``prod 1/(1 - x^j)`` over ``j >= 1`` with ``j % modulus`` not excluded.

    Coefficient n is the number of partitions of n into allowed parts.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    excluded = {r % modulus for r in excluded_residues}
    nums = [1] + [0] * order
    for j in range(1, order + 1):
        if j % modulus not in excluded:
            nums = _kernel.divide_binomial(nums, j, order)
    return TruncSeries._raw(nums)


def evaluate(a: TruncSeries, x0) -> Fraction:
    """Exact value of the polynomial ``sum_k a_k x0**k``."""
    x0 = Fraction(x0)
    u, w = x0.numerator, x0.denominator
    # homogeneous Horner: sum a_k u^k w^(N-k), then divide by w^N
    acc = 0
    wpow = 1
    for v in reversed(a._nums):
        acc = acc * u + v * wpow
        wpow *= w
    return Fraction(acc, (wpow // w) * a._den)
