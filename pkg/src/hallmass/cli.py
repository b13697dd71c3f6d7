"""Command-line front end.

Exit status: 0 when everything verified, 1 when some identity shows a
coefficient mismatch, 2 on usage or parse errors.  Results go to stdout,
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from hallmass import identities as ids
from hallmass.groups import GroupDescriptor, aut_order, hol_order, is_prime
from hallmass.partitions import Partition, iter_partitions, iter_partitions_constrained, partition_counts

DEFAULT_ORDER = 64

# identity -> (required keys, optional keys)
GRAMMAR = {
    "rr1": ((), ("order",)),
    "rr2": ((), ("order",)),
    "ag": (("r", "i"), ("order", "modulus")),
    "hall": ((), ("order",)),
    "hall-num": (("p",), ("order", "n_max", "budget")),
    "bounded-exp": (("r",), ("order",)),
    "holomorph": ((), ("order",)),
    "gen": (("k",), ("order",)),
    "digits": (("p", "digits"), ()),
}


class SpecError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


@dataclass
class BatchEntry:
    identity: str
    params: dict
    line: int
    order: int = DEFAULT_ORDER

    def describe(self) -> str:
        return " ".join([self.identity] + [f"{k}={v}" for k, v in self.params.items()])


@dataclass
class BatchSpec:
    entries: list = field(default_factory=list)


def parse_spec(text: str) -> BatchSpec:
    """Parse ``<identity> key=value ...`` lines; ``#`` starts a comment."""
    spec = BatchSpec()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = []
        pos = 0
        for tok in line.split():
            pos = line.index(tok, pos)
            tokens.append((tok, pos + 1))
            pos += len(tok)
        name, name_col = tokens[0]
        if name not in GRAMMAR:
            raise SpecError(f"unknown identity {name!r}", lineno, name_col)
        required, optional = GRAMMAR[name]
        params: dict = {}
        for tok, col in tokens[1:]:
            key, eq, value = tok.partition("=")
            if not eq or not key or not value:
                raise SpecError(f"malformed key=value {tok!r}", lineno, col)
            if key not in required and key not in optional:
                raise SpecError(f"unknown key {key} for {name}", lineno, col)
            if key in params:
                raise SpecError(f"duplicate key {key}", lineno, col)
            try:
                params[key] = int(value)
            except ValueError:
                raise SpecError(f"non-integer value for {key}: {value!r}",
                                lineno, col + len(key) + 1) from None
        for key in required:
            if key not in params:
                raise SpecError(f"missing key {key}", lineno, len(line.rstrip()) + 1)
        spec.entries.append(BatchEntry(name, params, lineno,
                                       params.get("order", DEFAULT_ORDER)))
    return spec


def run_entry(entry: BatchEntry):
    """Evaluate one batch entry; returns a report object."""
    p, n = entry.params, entry.order
    name = entry.identity
    if name == "rr1":
        return ids.verify_rr_first(n)
    if name == "rr2":
        return ids.verify_rr_second(n)
    if name == "ag":
        return ids.verify_andrews_gordon(p["r"], p["i"], n, p.get("modulus"))
    if name == "hall":
        return ids.verify_hall(n)
    if name == "bounded-exp":
        return ids.verify_bounded_exponent(p["r"], n)
    if name == "holomorph":
        return ids.verify_holomorph(n)
    if name == "gen":
        return ids.verify_generalized(p["k"], n)
    if name == "hall-num":
        return ids.verify_hall_numeric(p["p"], p.get("n_max", n), p.get("budget", n))
    if name == "digits":
        return ids.compute_constant_digits(p["p"], p["digits"])
    raise ValueError(f"unknown identity {name!r}")


def report_ok(report) -> bool:
    return getattr(report, "ok", True)


# rendering -------------------------------------------------------------------

def render_tsv(report) -> str:
    if isinstance(report, ids.IdentityReport):
        rows = ["n\tlhs\trhs\tequal"]
        fmt = ids.format_coeff
        for n, (a, b) in enumerate(zip(report.lhs_coeffs, report.rhs_coeffs)):
            rows.append(f"{n}\t{fmt(a)}\t{fmt(b)}\t{'true' if report.equal_at(n) else 'false'}")
        return "\n".join(rows) + "\n"
    d = report.to_dict()
    rows = [f"{k}\t{v}" for k, v in d["params"].items()]
    rows += [f"{k}\t{v}" for k, v in d.items()
             if k not in ("identity_id", "params", "elapsed")]
    return "\n".join(rows) + "\n"


def render(reports, fmt: str, entries=None) -> str:
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        return json.dumps(payload if entries is not None else payload[0], indent=2) + "\n"
    if entries is None:
        return render_tsv(reports[0])
    blocks = [f"# {e.describe()}\n{render_tsv(r)}" for e, r in zip(entries, reports)]
    return "\n".join(blocks)


def diagnose(report, label: str) -> None:
    if isinstance(report, ids.IdentityReport) and not report.ok:
        print(f"{label}: first mismatch at n={report.first_mismatch} ({report.mismatch_pair})",
              file=sys.stderr)
    elif isinstance(report, ids.NumericReport) and not report.ok:
        print(f"{label}: numeric check failed (monotone={report.monotone})", file=sys.stderr)


# subcommands -----------------------------------------------------------------

class UsageError(Exception):
    pass


def _verify(args) -> int:
    name = args.name
    required, optional = GRAMMAR[name]
    params = {}
    flags = {"r": args.r, "i": args.i, "k": args.k, "p": args.p,
             "modulus": args.modulus_override, "n_max": args.n_max, "budget": args.budget}
    for key in required + optional:
        if key == "order":
            continue
        if flags.get(key) is not None:
            params[key] = flags[key]
        elif key in required:
            raise UsageError(f"verify {name}: missing --{key.replace('_', '-')}")
    for key, value in flags.items():
        if value is not None and key not in required + optional:
            raise UsageError(f"verify {name}: --{key.replace('_', '-')} does not apply")
    if args.order is not None:
        params["order"] = args.order
    entry = BatchEntry(name, params, 0, args.order if args.order is not None else DEFAULT_ORDER)
    report = run_entry(entry)
    sys.stdout.write(render([report], args.format))
    diagnose(report, entry.describe())
    return 0 if report_ok(report) else 1


def _batch(args) -> int:
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        spec = parse_spec(text)
    except SpecError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run_entry, spec.entries))
    else:
        reports = [run_entry(e) for e in spec.entries]
    if spec.entries:
        sys.stdout.write(render(reports, args.format, spec.entries))
    elif args.format == "json":
        sys.stdout.write("[]\n")
    status = 0
    for e, r in zip(spec.entries, reports):
        diagnose(r, f"line {e.line}: {e.describe()}")
        if not report_ok(r):
            status = 1
    return status


def parse_lambda(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--lambda must be comma-separated integers, got {text!r}") from None
    try:
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"--lambda: {exc}") from None


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")


def _aut_order(args) -> int:
    _check_prime(args.p)
    g = GroupDescriptor(args.p, parse_lambda(args.lam))
    a = aut_order(g)
    h = hol_order(g)
    if args.format == "json":
        print(json.dumps({"p": g.p, "lambda": list(g.lam), "G": g.order, "Aut": a, "Hol": h}))
    else:
        print(f"|G|={g.order}\n|Aut|={a}\n|Hol|={h}")
    return 0


def _mass_table(args) -> int:
    _check_prime(args.p)
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    p = args.p
    counts = partition_counts(args.max_n)
    cum_mass = Fraction(0)
    cum_pi = Fraction(0)
    fmt = ids.format_coeff
    print("n\tgroups\tmass\tcumulative_mass\tcumulative_pi_over_p^n")
    for n in range(args.max_n + 1):
        mass = sum((Fraction(1, aut_order(GroupDescriptor(p, lam))) for lam in iter_partitions(n)),
                   Fraction(0))
        cum_mass += mass
        cum_pi += Fraction(counts[n], p ** n)
        print(f"{n}\t{counts[n]}\t{fmt(mass)}\t{fmt(cum_mass)}\t{fmt(cum_pi)}")
    return 0


def _digits(args) -> int:
    if args.p < 2:
        raise UsageError(f"--p must be >= 2, got {args.p}")
    if not 1 <= args.digits <= 1000:
        raise UsageError("--digits must be in 1..1000")
    res = ids.compute_constant_digits(args.p, args.digits)
    print(res.value)
    print(f"# n_max={res.n_max} tail_bound={res.to_dict()['tail_bound']}", file=sys.stderr)
    return 0


def _partitions(args) -> int:
    for name in ("n", "max_part", "max_len", "first_k_equal"):
        v = getattr(args, name)
        if v is not None and v < 0:
            raise UsageError(f"{name.replace('_', '-')} must be nonnegative")
    for lam in iter_partitions_constrained(args.n, args.max_part, args.max_len, args.first_k_equal):
        print("(" + ",".join(map(str, lam)) + ")")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hallmass",
        description="Exact q-series checks of Hall's mass formula and Rogers-Ramanujan type identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one identity")
    v.add_argument("name", choices=[n for n in GRAMMAR if n != "digits"])
    v.add_argument("--r", type=int)
    v.add_argument("--i", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--order", type=int, help=f"truncation order N (default {DEFAULT_ORDER})")
    v.add_argument("--n-max", type=int, help="hall-num: partition-side cutoff (default: order)")
    v.add_argument("--budget", type=int, help="hall-num: mass-side budget (default: order)")
    v.add_argument("--modulus-override", type=int,
                   help="ag: use this modulus for the product side (diagnostic)")
    v.add_argument("--format", choices=("tsv", "json"), default="tsv")
    v.set_defaults(func=_verify)

    b = sub.add_parser("batch", help="run every entry of a spec file")
    b.add_argument("file")
    b.add_argument("--format", choices=("tsv", "json"), default="tsv")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=_batch)

    a = sub.add_parser("aut-order", help="print |G|, |Aut G|, |Hol G|")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--lambda", dest="lam", required=True,
                   help="type as a weakly decreasing comma-separated list, e.g. 2,1")
    a.add_argument("--format", choices=("tsv", "json"), default="tsv")
    a.set_defaults(func=_aut_order)

    m = sub.add_parser("mass-table", help="sum of 1/|Aut G| over groups of each order p^n")
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--max-n", type=int, required=True)
    m.set_defaults(func=_mass_table)

    d = sub.add_parser("digits", help="digits of sum pi(n)/p^n")
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--digits", type=int, required=True)
    d.set_defaults(func=_digits)

    pt = sub.add_parser("partitions", help="list partitions of n")
    pt.add_argument("n", type=int)
    pt.add_argument("--max-part", type=int)
    pt.add_argument("--max-len", type=int)
    pt.add_argument("--first-k-equal", type=int)
    pt.set_defaults(func=_partitions)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if getattr(args, "order", None) is not None and args.order < 0:
            raise UsageError("--order must be nonnegative")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hallmass: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
