"""Orders attached to a finite abelian p-group of given type.

With ``mu`` the conjugate of the type ``lam`` and ``rho = 1/p``::

    |Aut(G)| = p^(mu_1^2 + mu_2^2 + ...) * f_{mu_1-mu_2}(rho) f_{mu_2-mu_3}(rho) ... f_{mu_s}(rho)

where ``f_k(x) = (1-x)...(1-x^k)`` and the last factor uses ``mu_{s+1} = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from hallmass.partitions import Partition, conjugate
from hallmass.qseries import TruncSeries, f_poly, invert

ORACLE_LIMIT = 128


class OracleLimitError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GroupDescriptor:
    """``G = Z/p^lam_1 + ... + Z/p^lam_r``."""

    p: int
    lam: Partition

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not isinstance(self.lam, Partition):
            object.__setattr__(self, "lam", Partition(self.lam))

    @property
    def order(self) -> int:
        return self.p ** self.lam.size

    @property
    def mu(self) -> Partition:
        return conjugate(self.lam)


def _mu_gaps(mu: Partition) -> list[int]:
    padded = list(mu) + [0]
    return [padded[j] - padded[j + 1] for j in range(len(mu))]


def aut_order(g: GroupDescriptor) -> int:
    mu = g.mu
    rho = Fraction(1, g.p)
    value = Fraction(g.p) ** mu.square_sum()
    for d in _mu_gaps(mu):
        value *= f_poly(d, d * (d + 1) // 2).evaluate(rho)
    if value.denominator != 1:
        raise ArithmeticError(f"automorphism order is not an integer for {g}: {value}")
    return value.numerator


def hol_order(g: GroupDescriptor) -> int:
    return g.order * aut_order(g)


def aut_mass_series(lam, order: int) -> TruncSeries:
    """``1/|Aut(G)|`` as a series in ``x = 1/p``.

    Equals ``x^(sum mu_i^2) / prod_j f_{mu_j - mu_{j+1}}(x)`` truncated to
    ``order``; only the product up to ``order - sum mu_i^2`` is formed.
    """
    mu = conjugate(lam)
    return _mass_term(mu.square_sum(), _mu_gaps(mu), order)


def _mass_term(shift: int, gaps, order: int, cache: dict | None = None) -> TruncSeries:
    """``x^shift * prod_d 1/f_d`` truncated to ``order``."""
    if shift > order:
        return TruncSeries.zero(order)
    inner = order - shift
    acc = TruncSeries.one(inner)
    for d in gaps:
        if d == 0:
            continue
        key = (d, inner)
        if cache is not None and key in cache:
            inv = cache[key]
        else:
            inv = invert(f_poly(d, inner))
            if cache is not None:
                cache[key] = inv
        acc = acc * inv
    return acc.shift(shift, order)


# brute-force oracle ---------------------------------------------------------

def brute_force_aut_count(g: GroupDescriptor) -> int:
    """Count automorphisms of ``G`` directly.

    An assignment of images ``g_i`` to the standard generators with
    ``p^lam_i * g_i = 0`` always extends to an endomorphism; it is an
    automorphism exactly when the images generate ``G``.  Generators are
    chosen one at a time, and since ``|<g_1..g_j>|`` can be at most
    ``p^(lam_1+..+lam_j)`` the partial subgroup must reach that size at every
    step.  Counts are memoized on the partial subgroup.
    """
    if g.order > ORACLE_LIMIT:
        raise OracleLimitError(f"oracle limit: |G| = {g.order} exceeds {ORACLE_LIMIT}")
    moduli = [g.p ** v for v in g.lam]
    elements = list(product(*(range(m) for m in moduli)))

    def add(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    def times(c, a):
        return tuple((c * x) % m for x, m in zip(a, moduli))

    zero = tuple(0 for _ in moduli)
    candidates = [[e for e in elements if times(m, e) == zero] for m in moduli]
    targets = []
    size = 1
    for m in moduli:
        size *= m
        targets.append(size)

    memo: dict = {}

    def extend(j: int, sub: frozenset) -> int:
        if j == len(moduli):
            return 1
        key = (j, sub)
        if key in memo:
            return memo[key]
        total = 0
        for e in candidates[j]:
            grown = _join(sub, e, add)
            if len(grown) == targets[j]:
                total += extend(j + 1, grown)
        memo[key] = total
        return total

    return extend(0, frozenset([zero]))


def _join(sub: frozenset, e, add) -> frozenset:
    """Subgroup generated by ``sub`` and ``e`` in an abelian group."""
    out = set(sub)
    frontier = list(sub)
    while frontier:
        nxt = []
        for h in frontier:
            s = add(h, e)
            if s not in out:
                out.add(s)
                nxt.append(s)
        frontier = nxt
    return frozenset(out)
