"""Compare the compiled and pure-Python series kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints best-of-N wall times for the raw kernels and for full verifications
run under each backend.
"""
import argparse
import random
import time

from hallmass import _kernel, _pykernel
from hallmass.identities import verify_andrews_gordon, verify_hall, verify_rr_first
from hallmass.qseries import f_poly


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_cases(n):
    rng = random.Random(0)
    a = [rng.randint(-1000, 1000) for _ in range(n + 1)]
    b = [rng.randint(-1000, 1000) for _ in range(n + 1)]
    f = list(f_poly(12, n).int_coeffs())
    huge = [v * 10**30 for v in a]
    return {
        f"conv n={n}": lambda m: m.conv(a, b, n),
        f"conv bigint n={n}": lambda m: m.conv(huge, b, n),
        f"inverse f_12 n={n}": lambda m: m.inverse(f, n),
        f"divide_binomial x{n} n={n}": lambda m: [m.divide_binomial(a, j, n) for j in range(1, n + 1)],
    }


def verification_cases():
    return {
        "verify_rr_first(200)": lambda: verify_rr_first(200),
        "verify_hall(80)": lambda: verify_hall(80),
        "verify_andrews_gordon(4, 1, 100)": lambda: verify_andrews_gordon(4, 1, 100),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = _kernel.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the python backend is timed")
    mods = {"python": _pykernel}
    if _kernel._ckernel is not None:
        mods["cython"] = _kernel._ckernel

    print(f"{'case':40s}" + "".join(f"{b:>12s}" for b in mods) + "     speedup")
    for n in (100, 400):
        for name, fn in kernel_cases(n).items():
            times = {b: best_of(lambda: fn(m), args.repeat) for b, m in mods.items()}
            _row(name, times)
    for name, fn in verification_cases().items():
        times = {}
        for b in mods:
            prev = _kernel.set_backend(b)
            try:
                times[b] = best_of(fn, args.repeat)
            finally:
                _kernel.set_backend(prev)
        _row(name, times)


def _row(name, times):
    cells = "".join(f"{t * 1e3:10.2f}ms" for t in times.values())
    speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
    print(f"{name:40s}{cells}{speed}")


if __name__ == "__main__":
    main()
