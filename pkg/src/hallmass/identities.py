"""Coefficientwise verification of the Hall / Rogers-Ramanujan family.

Each ``verify_*`` function builds both sides of one identity as exact
truncated series in ``x`` (with ``x`` standing for ``1/p``) and returns an
:class:`IdentityReport`.  Three-route identities carry the third series in
``aux_coeffs``.

Andrews-Gordon modulus
    The sum side has ``r`` summation variables and ``1 <= i <= r + 1``; the
    matching product excludes ``j = 0, +-i`` modulo ``2r + 3``.  With
    ``r = 1`` this is modulus 5, i.e. the two Rogers-Ramanujan identities.
    The modulus ``2r + 1`` is available through ``modulus=`` as a
    diagnostic and fails already at r = 1.

Denominators
    The Andrews-Gordon summand denominator is read as
    ``f_{k_1-k_2} f_{k_2-k_3} ... f_{k_r}``, i.e. with ``k_{r+1} = 0``; for
    ``i = r + 1`` each summand is then exactly ``1/|Aut(G)|`` for the group
    whose conjugate type is ``(k_1, ..., k_r)``.

Trivial group
    Class membership uses zero-padded parts, so the trivial group is in
    every class "first k parts equal" and counts as capable.  Both sides of
    the holomorph and generalized identities then start with constant 1.

Example, Hall's identity to order 2: ``mu = (1)`` gives ``x/(1-x) = x + x^2``
and ``mu = (1, 1)`` gives ``x^2``, so the sum side is ``1 + x + 2x^2``,
matching ``pi(0), pi(1), pi(2)``.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt, log, pi, sqrt

import mpmath

from hallmass.groups import _mass_term, _mu_gaps, aut_mass_series, is_prime
from hallmass.partitions import (
    conjugate,
    count_partitions_constrained,
    enumerate_by_square_sum,
    iter_partitions,
    partition_counts,
)
from hallmass.qseries import TruncSeries, evaluate, f_poly, monomial, restricted_product

IDENTITIES = ("rr1", "rr2", "ag", "hall", "bounded-exp", "holomorph", "gen")

# pi(n) <= exp(HR_CONSTANT * sqrt(n))
HR_CONSTANT = pi * sqrt(2.0 / 3.0)


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_coeff(text: str) -> Fraction:
    return Fraction(text)


@dataclass
class IdentityReport:
    identity_id: str
    params: dict
    lhs_coeffs: list
    rhs_coeffs: list
    first_mismatch: int | None = None
    elapsed: float = 0.0
    aux_coeffs: list | None = None
    mismatch_pair: str | None = None
    labels: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    @property
    def order(self) -> int:
        return len(self.lhs_coeffs) - 1

    def equal_at(self, n: int) -> bool:
        same = self.lhs_coeffs[n] == self.rhs_coeffs[n]
        if self.aux_coeffs is not None:
            same = same and self.lhs_coeffs[n] == self.aux_coeffs[n]
        return same

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("lhs_coeffs", "rhs_coeffs", "aux_coeffs"):
            if d[key] is not None:
                d[key] = [format_coeff(c) for c in d[key]]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> IdentityReport:
        d = dict(d)
        for key in ("lhs_coeffs", "rhs_coeffs", "aux_coeffs"):
            if d.get(key) is not None:
                d[key] = [parse_coeff(c) for c in d[key]]
        return cls(**d)


def compare(routes: dict) -> tuple[int | None, str | None]:
    """First index where any two routes differ, and which pair.

    ``routes`` maps route names to equal-length coefficient sequences; pairs
    are checked in insertion order at each index.
    """
    names = list(routes)
    lengths = {len(v) for v in routes.values()}
    if len(lengths) != 1:
        raise ValueError("routes must have equal length")
    for n in range(lengths.pop()):
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                if routes[names[a]][n] != routes[names[b]][n]:
                    return n, f"{names[a]}/{names[b]}"
    return None, None


def _report(identity_id, params, lhs, rhs, started, aux=None, labels=None) -> IdentityReport:
    lhs = list(lhs.coeffs) if isinstance(lhs, TruncSeries) else list(lhs)
    rhs = list(rhs.coeffs) if isinstance(rhs, TruncSeries) else list(rhs)
    routes = {"lhs": lhs, "rhs": rhs}
    if aux is not None:
        aux = list(aux.coeffs) if isinstance(aux, TruncSeries) else list(aux)
        routes["aux"] = aux
    index, pair = compare(routes)
    for name, coeffs in routes.items():
        if any(c < 0 for c in coeffs):
            raise ArithmeticError(f"{identity_id}: negative coefficient on {name} side")
    return IdentityReport(
        identity_id=identity_id,
        params=dict(params),
        lhs_coeffs=lhs,
        rhs_coeffs=rhs,
        first_mismatch=index,
        elapsed=time.perf_counter() - started,
        aux_coeffs=aux,
        mismatch_pair=pair,
        labels=dict(labels or {}),
    )


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError("order must be nonnegative")


def _require_integral(identity_id: str, *series: TruncSeries) -> None:
    for s in series:
        if not s.is_integral():
            raise ArithmeticError(f"{identity_id}: counting series has a non-integer coefficient")


def _class_count_series(first_k_equal: int, order: int) -> TruncSeries:
    return TruncSeries._raw([count_partitions_constrained(n, first_k_equal=first_k_equal)
                             for n in range(order + 1)])


# sum sides --------------------------------------------------------------------

def rogers_ramanujan_sum(order: int, linear: bool) -> TruncSeries:
    """``1 + sum_k x^(k^2 [+ k]) / f_k`` truncated to ``order``."""
    total = TruncSeries.one(order)
    k = 1
    while k * k + (k if linear else 0) <= order:
        total = total + _mass_term(k * k + (k if linear else 0), [k], order)
        k += 1
    return total


def andrews_gordon_sum(r: int, i: int, order: int) -> TruncSeries:
    """Sum side of the Andrews-Gordon identity with ``r`` variables.

    Runs over ``k_1 >= ... >= k_r >= 0`` with ``sum k_j^2 <= order``.
    """
    if r < 1 or not 1 <= i <= r + 1:
        raise ValueError(f"need r >= 1 and 1 <= i <= r + 1, got r={r}, i={i}")
    cache: dict = {}
    total = TruncSeries.zero(order)
    ks = [0] * r

    def walk(j: int, cap: int, budget: int):
        nonlocal total
        if j == r:
            exponent = sum(v * v for v in ks) + sum(ks[i - 1:])
            if exponent <= order:
                gaps = [ks[t] - (ks[t + 1] if t + 1 < r else 0) for t in range(r)]
                total = total + _mass_term(exponent, gaps, order, cache)
            return
        for v in range(min(cap, isqrt(budget)), -1, -1):
            ks[j] = v
            walk(j + 1, v, budget - v * v)
        ks[j] = 0

    walk(0, isqrt(order), order)
    return total


def andrews_gordon_product(r: int, i: int, order: int, modulus: int | None = None) -> TruncSeries:
    m = 2 * r + 3 if modulus is None else modulus
    return restricted_product(m, {0, i % m, (m - i) % m}, order)


def hall_sum(order: int, weight: int = 0) -> TruncSeries:
    """``sum_G x^(weight*log_p|G|) / |Aut G|`` truncated to ``order``.

    Runs over conjugate types ``mu`` with ``weight*|mu| + sum mu_i^2 <= order``.
    """
    cache: dict = {}
    total = TruncSeries.zero(order)
    for mu in enumerate_by_square_sum(order):
        shift = weight * mu.size + mu.square_sum()
        if shift <= order:
            total = total + _mass_term(shift, _mu_gaps(mu), order, cache)
    return total


# verifiers --------------------------------------------------------------------

def verify_rr_first(order: int) -> IdentityReport:
    _check_order(order)
    t0 = time.perf_counter()
    lhs = rogers_ramanujan_sum(order, linear=False)
    rhs = restricted_product(5, {0, 2, 3}, order)
    return _report("rr1", {"order": order}, lhs, rhs, t0,
                   labels={"lhs": "sum x^(k^2)/f_k", "rhs": "prod over j = 1,4 mod 5"})


def verify_rr_second(order: int) -> IdentityReport:
    _check_order(order)
    t0 = time.perf_counter()
    lhs = rogers_ramanujan_sum(order, linear=True)
    rhs = restricted_product(5, {0, 1, 4}, order)
    return _report("rr2", {"order": order}, lhs, rhs, t0,
                   labels={"lhs": "sum x^(k^2+k)/f_k", "rhs": "prod over j = 2,3 mod 5"})


def verify_andrews_gordon(r: int, i: int, order: int, modulus: int | None = None) -> IdentityReport:
    _check_order(order)
    if r < 1 or not 1 <= i <= r + 1:
        raise ValueError(f"need r >= 1 and 1 <= i <= r + 1, got r={r}, i={i}")
    if modulus is not None and modulus < 1:
        raise ValueError("modulus must be positive")
    t0 = time.perf_counter()
    lhs = andrews_gordon_sum(r, i, order)
    rhs = andrews_gordon_product(r, i, order, modulus)
    params = {"r": r, "i": i, "order": order}
    if modulus is not None:
        params["modulus"] = modulus
    m = 2 * r + 3 if modulus is None else modulus
    return _report("ag", params, lhs, rhs, t0,
                   labels={"lhs": f"sum over k_1>=...>=k_{r}", "rhs": f"prod over j != 0,+-{i} mod {m}"})


def verify_bounded_exponent(r: int, order: int) -> IdentityReport:
    """Groups of exponent at most ``p^r``: type route vs. Andrews-Gordon route."""
    _check_order(order)
    if r < 1:
        raise ValueError("r must be >= 1")
    t0 = time.perf_counter()
    lhs = TruncSeries.zero(order)
    # sum mu_i^2 >= |lam|, so sizes beyond order contribute nothing
    for n in range(order + 1):
        for lam in iter_partitions(n, max_part=r):
            if conjugate(lam).square_sum() <= order:
                lhs = lhs + aut_mass_series(lam, order)
    rhs = andrews_gordon_sum(r, r + 1, order)
    return _report("bounded-exp", {"r": r, "order": order}, lhs, rhs, t0,
                   labels={"lhs": "sum over types lam_1<=r of 1/|Aut|",
                           "rhs": f"Andrews-Gordon sum r={r}, i={r + 1}"})


def verify_hall(order: int) -> IdentityReport:
    _check_order(order)
    t0 = time.perf_counter()
    lhs = hall_sum(order)
    rhs = restricted_product(1, (), order)
    return _report("hall", {"order": order}, lhs, rhs, t0,
                   labels={"lhs": "sum 1/|Aut G|", "rhs": "sum pi(n) x^n"})


def verify_holomorph(order: int) -> IdentityReport:
    """Capable groups vs. holomorph masses, with the parts->=2 product as aux."""
    _check_order(order)
    t0 = time.perf_counter()
    lhs = _class_count_series(2, order)
    _require_integral("holomorph", lhs)
    rhs = hall_sum(order, weight=1)
    # residue 1 modulo order+2 removes exactly the part j = 1 among j <= order
    aux = restricted_product(order + 2, {1}, order)
    return _report("holomorph", {"order": order}, lhs, rhs, t0, aux=aux,
                   labels={"lhs": "capable groups: sum x^n", "rhs": "sum 1/|Hol G|",
                           "aux": "prod_{j>=2} 1/(1-x^j)"})


def verify_generalized(k: int, order: int) -> IdentityReport:
    """Classes with k+1 equal leading factors, weighted masses, closed form."""
    _check_order(order)
    if k < 0:
        raise ValueError("k must be >= 0")
    t0 = time.perf_counter()
    s1 = _class_count_series(k + 1, order)
    s2 = hall_sum(order, weight=k)
    s3 = f_poly(k, order) * restricted_product(1, (), order)
    _require_integral("gen", s1, s3)
    return _report("gen", {"k": k, "order": order}, s1, s2, t0, aux=s3,
                   labels={"lhs": f"groups with {k + 1} equal leading factors",
                           "rhs": f"sum 1/(|G|^{k} |Aut G|)",
                           "aux": f"f_{k} * sum pi(n) x^n"})


# numeric forms ---------------------------------------------------------------

@dataclass
class NumericReport:
    p: int
    n_max: int
    mass_budget: int
    mass_sum: Fraction
    partition_sum: Fraction
    monotone: bool
    elapsed: float = 0.0

    @property
    def gap(self) -> Fraction:
        return abs(self.mass_sum - self.partition_sum)

    @property
    def ok(self) -> bool:
        # nonnegative coefficients: partial mass sums approach from below
        one_sided = self.n_max < self.mass_budget or self.mass_sum <= self.partition_sum
        return self.monotone and one_sided

    def to_dict(self) -> dict:
        return {
            "identity_id": "hall-num",
            "params": {"p": self.p, "n_max": self.n_max, "budget": self.mass_budget},
            "mass_sum": format_coeff(self.mass_sum),
            "partition_sum": format_coeff(self.partition_sum),
            "gap": format_coeff(self.gap),
            "gap_decimal": f"{float(self.gap):.6e}",
            "monotone": self.monotone,
            "elapsed": self.elapsed,
        }


def verify_hall_numeric(p: int, n_max: int, mass_budget: int) -> NumericReport:
    """Both sides of Hall's identity evaluated exactly at ``x = 1/p``.

    ``mass_sum`` adds ``1/|Aut G|`` expansions over every type whose
    conjugate has square sum within ``mass_budget``; ``partition_sum`` is
    ``sum_{n <= n_max} pi(n) / p^n``.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n_max < 0 or mass_budget < 0:
        raise ValueError("n_max and mass_budget must be nonnegative")
    t0 = time.perf_counter()
    rho = Fraction(1, p)
    series = [aut_mass_series(conjugate(mu), mass_budget)
              for mu in enumerate_by_square_sum(mass_budget)]
    mass_sum = sum((evaluate(s, rho) for s in series), Fraction(0))
    # truncating every term to b gives the value at budget b
    total = series[0]
    for s in series[1:]:
        total = total + s
    partial = [evaluate(total.truncate(b), rho) for b in range(mass_budget + 1)]
    monotone = all(a <= b for a, b in zip(partial, partial[1:])) and partial[-1] == mass_sum
    counts = partition_counts(n_max)
    partition_sum = sum((Fraction(c, p ** n) for n, c in enumerate(counts)), Fraction(0))
    return NumericReport(p, n_max, mass_budget, mass_sum, partition_sum, monotone,
                         time.perf_counter() - t0)


@dataclass
class DigitsResult:
    p: int
    digits: int
    value: str
    n_max: int
    tail_bound: mpmath.mpf

    def to_dict(self) -> dict:
        return {
            "identity_id": "digits",
            "params": {"p": self.p, "digits": self.digits},
            "value": self.value,
            "n_max": self.n_max,
            "tail_bound": mpmath.nstr(self.tail_bound, 6),
        }


def partition_bound_holds(n: int, count: int) -> bool:
    """Check ``pi(n) <= exp(pi * sqrt(2n/3))`` in log form."""
    return log(count) <= HR_CONSTANT * sqrt(n) + 1e-12


def tail_bound(p: int, n_max: int, dps: int = 30):
    """Upper bound for ``sum_{n > n_max} exp(c sqrt n) / p^n``, or None.

    Consecutive terms shrink by at most ``q = exp(c / (2 sqrt(n_max+1))) / p``
    past ``n_max``, so the tail is below ``term(n_max+1) / (1 - q)`` when
    ``q < 1``.
    """
    with mpmath.workdps(dps):
        c = mpmath.pi * mpmath.sqrt(mpmath.mpf(2) / 3)
        m = n_max + 1
        q = mpmath.exp(c / (2 * mpmath.sqrt(m))) / p
        if q >= 1:
            return None
        return mpmath.exp(c * mpmath.sqrt(m)) / mpmath.power(p, m) / (1 - q)


def compute_constant_digits(p: int, digits: int) -> DigitsResult:
    """Leading ``digits`` significant digits of ``sum_n pi(n)/p^n``, truncated.

    Any base ``p >= 2`` is accepted; primes are the group-theoretic case.

    The partial sum is taken far enough that the certified tail bound is
    below ``10^-(digits+2)``, then extended further until partial sum and
    partial sum plus bound truncate to the same digit string.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if not 1 <= digits <= 1000:
        raise ValueError("digits must be in 1..1000")
    dps = digits + 30
    threshold = mpmath.mpf(10) ** (-(digits + 2))
    n_max = 1
    with mpmath.workdps(dps):
        while True:
            bound = tail_bound(p, n_max, dps)
            if bound is not None and bound < threshold:
                break
            n_max = n_max * 2
        lo_n = n_max // 2
        while lo_n + 1 < n_max:
            mid = (lo_n + n_max) // 2
            bound = tail_bound(p, mid, dps)
            if bound is not None and bound < threshold:
                n_max = mid
            else:
                lo_n = mid
        while True:
            counts = partition_counts(n_max)
            low = sum((Fraction(c, p ** n) for n, c in enumerate(counts)), Fraction(0))
            bound = tail_bound(p, n_max, dps)
            # round the bound up to a rational strictly above it
            bound_q = Fraction(int(mpmath.ceil(bound * mpmath.mpf(10) ** (digits + 20))) + 1,
                               10 ** (digits + 20))
            lo_str = _truncate(low, digits)
            if lo_str == _truncate(low + bound_q, digits):
                return DigitsResult(p, digits, lo_str, n_max, bound)
            n_max += max(8, n_max // 4)


def _truncate(value: Fraction, digits: int) -> str:
    whole = int(value)
    int_len = len(str(whole))
    frac_digits = max(0, digits - int_len)
    scaled = value.numerator * 10 ** frac_digits // value.denominator
    s = str(scaled)
    if frac_digits == 0:
        return s[:digits] if int_len > digits else s
    return f"{s[:-frac_digits]}.{s[-frac_digits:]}"
