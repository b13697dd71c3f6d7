"""Exact q-series verification of Hall's mass formula for abelian p-groups
and the Rogers-Ramanujan / Andrews-Gordon identities."""
from hallmass._kernel import BACKEND
from hallmass.groups import (
    GroupDescriptor,
    aut_mass_series,
    aut_order,
    brute_force_aut_count,
    hol_order,
)
from hallmass.identities import (
    IdentityReport,
    compute_constant_digits,
    verify_andrews_gordon,
    verify_bounded_exponent,
    verify_generalized,
    verify_hall,
    verify_hall_numeric,
    verify_holomorph,
    verify_rr_first,
    verify_rr_second,
)
from hallmass.partitions import (
    Partition,
    conjugate,
    enumerate_by_square_sum,
    enumerate_partitions,
    enumerate_partitions_constrained,
    is_capable,
    partition_count,
)
from hallmass.qseries import TruncSeries, f_poly, invert, monomial, restricted_product

__version__ = "0.1.0"
