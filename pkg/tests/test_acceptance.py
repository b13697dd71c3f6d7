"""Exit criteria.  Each test prints one PASS/FAIL line; the lines are also
collected into the ``acceptance criteria`` section of the pytest summary."""
import contextlib
import io
import json
import time
from fractions import Fraction

from hallmass import _kernel
from hallmass.cli import run
from hallmass.groups import GroupDescriptor, aut_order, brute_force_aut_count
from hallmass.identities import (
    IdentityReport,
    _report,
    partition_bound_holds,
    verify_andrews_gordon,
    verify_bounded_exponent,
    verify_hall_numeric,
    verify_rr_first,
    verify_rr_second,
)
from hallmass.partitions import count_partitions_constrained, iter_partitions, partition_counts


def cli(*argv):
    """Run the CLI in-process; returns (exit code, stdout, stderr, seconds)."""
    out, err = io.StringIO(), io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue(), time.perf_counter() - t0


def cli_report(*argv):
    code, out, err, secs = cli(*argv, "--format", "json")
    return code, IdentityReport.from_dict(json.loads(out)), secs


def dp_partition_counts(n):
    row = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            row[m] += row[m - k]
    return row


def test_c01_rogers_ramanujan(record_criterion):
    results = []
    for name in ("rr1", "rr2"):
        code, rep, secs = cli_report("verify", name, "--order", "200")
        results.append((name, code == 0 and rep.first_mismatch is None and secs < 5.0, secs))
    ok = all(r[1] for r in results)
    detail = ", ".join(f"{n} {s:.2f}s" for n, _, s in results)
    assert record_criterion(1, "Rogers-Ramanujan to order 200, < 5 s each", ok, detail)


def test_c02_andrews_gordon(record_criterion):
    t0 = time.perf_counter()
    failures = []
    for r in range(1, 5):
        for i in range(1, r + 2):
            code, rep, _ = cli_report("verify", "ag", "--r", str(r), "--i", str(i), "--order", "100")
            if code != 0 or rep.first_mismatch is not None or rep.params.get("modulus") is not None:
                failures.append((r, i))
    total = time.perf_counter() - t0
    code, rep, _ = cli_report("verify", "ag", "--r", "1", "--i", "2", "--order", "100",
                              "--modulus-override", "3")
    diagnostic = code == 1 and rep.first_mismatch is not None and rep.first_mismatch <= 10
    ok = not failures and total < 60.0 and diagnostic
    detail = f"14 cases {total:.2f}s, mod-3 mismatch at n={rep.first_mismatch}"
    assert record_criterion(2, "Andrews-Gordon r<=4 mod 2r+3; mod 2r+1 diagnostic fails", ok, detail)


def test_c03_hall_formal(record_criterion):
    code, rep, secs = cli_report("verify", "hall", "--order", "80")
    ok = code == 0 and rep.first_mismatch is None and secs < 30.0
    ok = ok and rep.rhs_coeffs == partition_counts(80)
    assert record_criterion(3, "Hall formal identity to order 80, < 30 s", ok, f"{secs:.2f}s")


def test_c04_specialization(record_criterion):
    ag2, rr1 = verify_andrews_gordon(1, 2, 200), verify_rr_first(200)
    ag1, rr2 = verify_andrews_gordon(1, 1, 200), verify_rr_second(200)
    ok = ((ag2.lhs_coeffs, ag2.rhs_coeffs) == (rr1.lhs_coeffs, rr1.rhs_coeffs)
          and (ag1.lhs_coeffs, ag1.rhs_coeffs) == (rr2.lhs_coeffs, rr2.rhs_coeffs))
    assert record_criterion(4, "ag(1,2) == rr1 and ag(1,1) == rr2 at N=200", ok)


def test_c05_bounded_exponent(record_criterion):
    reps = [verify_bounded_exponent(r, 60) for r in (1, 2, 3)]
    ok = all(rep.ok and rep.lhs_coeffs == rep.rhs_coeffs for rep in reps)
    assert record_criterion(5, "exponent <= p^r: type route == Andrews-Gordon route, r=1..3, N=60", ok)


def test_c06_holomorph(record_criterion):
    code, rep, secs = cli_report("verify", "holomorph", "--order", "60")
    ok = (code == 0 and rep.first_mismatch is None
          and rep.lhs_coeffs == rep.rhs_coeffs == rep.aux_coeffs)
    assert record_criterion(6, "holomorph/capable identity to order 60 (three routes)", ok, f"{secs:.2f}s")


def test_c07_generalized(record_criterion):
    ok = True
    for k in range(5):
        code, rep, _ = cli_report("verify", "gen", "--k", str(k), "--order", "60")
        ok = ok and code == 0 and rep.first_mismatch is None
        if k == 0:
            _, hall, _ = cli_report("verify", "hall", "--order", "60")
            ok = ok and rep.rhs_coeffs == hall.lhs_coeffs and rep.aux_coeffs == hall.rhs_coeffs
    assert record_criterion(7, "generalized family k=0..4, N=60; k=0 equals Hall", ok)


def test_c08_aut_oracle(record_criterion):
    t0 = time.perf_counter()
    mismatches = []
    checked = 0
    for p, max_size in ((2, 4), (3, 3)):
        for n in range(max_size + 1):
            for lam in iter_partitions(n):
                g = GroupDescriptor(p, lam)
                checked += 1
                if aut_order(g) != brute_force_aut_count(g):
                    mismatches.append((p, tuple(lam)))
    anchors = (brute_force_aut_count(GroupDescriptor(2, (2, 1))) == 8
               and aut_order(GroupDescriptor(2, (2, 1))) == 8
               and brute_force_aut_count(GroupDescriptor(3, (1, 1))) == 48
               and aut_order(GroupDescriptor(3, (1, 1))) == 48)
    secs = time.perf_counter() - t0
    ok = not mismatches and anchors and secs < 120.0
    assert record_criterion(8, "automorphism formula == brute force (p=2 size<=4, p=3 size<=3)", ok,
                            f"{checked} types, {secs:.2f}s")


def test_c09_partition_engine(record_criterion):
    pi = partition_counts(2000)
    same = pi == dp_partition_counts(2000)
    capable = all(count_partitions_constrained(n, first_k_equal=2) == pi[n] - pi[n - 1]
                  for n in range(1, 61))
    assert record_criterion(9, "pentagonal pi(n) == DP for n<=2000; capable(n) == pi(n)-pi(n-1)",
                            same and capable)


def test_c10_numeric_convergence(record_criterion):
    full = verify_hall_numeric(2, 40, 40)
    values = [verify_hall_numeric(2, 40, b).mass_sum for b in (10, 20, 30, 40)]
    nondecreasing = all(a <= b for a, b in zip(values, values[1:]))
    ok = full.gap < Fraction(1, 10 ** 6) and nondecreasing and full.monotone
    assert record_criterion(10, "p=2 budget 40: |A-B| < 1e-6, A nondecreasing over 10..40", ok,
                            f"gap={float(full.gap):.3e}")


def test_c11_digits(record_criterion):
    c30, out30, _, _ = cli("digits", "--p", "2", "--digits", "30")
    c60, out60, _, _ = cli("digits", "--p", "2", "--digits", "60")
    d30, d60 = out30.strip(), out60.strip()
    consistent = c30 == c60 == 0 and len(d30.replace(".", "")) == 30 and d60.startswith(d30)
    pi = partition_counts(10_000)
    bound = all(partition_bound_holds(n, c) for n, c in enumerate(pi))
    assert record_criterion(11, "digits 30 vs 60 agree; pi(n) <= exp(pi sqrt(2n/3)) for n<=1e4",
                            consistent and bound, d30)


def test_c12_mutation(record_criterion):
    base = verify_rr_first(40)
    hits = 0
    total = 0
    for side in ("lhs", "rhs"):
        for idx in range(base.order + 1):
            lhs, rhs = list(base.lhs_coeffs), list(base.rhs_coeffs)
            (lhs if side == "lhs" else rhs)[idx] += 1
            rep = _report("rr1", base.params, lhs, rhs, 0.0)
            total += 1
            hits += rep.first_mismatch == idx
    ok = base.ok and hits == total
    assert record_criterion(12, "single-coefficient perturbation caught at its index", ok,
                            f"{hits}/{total}, backend={_kernel.BACKEND}")
