"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sweep]

Kernel timings call both implementations directly on the same inputs:
integer-scaled ad matrices from the catalog and random matrices with
small and with 40-bit entries. ``--sweep`` also times the golden
essentiality sweep end to end under each backend in a fresh process.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from liessence import _pykernels, catalog
from liessence.spectral import ad_matrix

try:
    from liessence import _ckernels
except ImportError:
    _ckernels = None


def catalog_matrices(specs):
    mats = []
    for spec in specs:
        a = catalog.build(spec).algebra
        for x in a.basis_elements():
            _, b = ad_matrix(a, x).scaled_integer()
            mats.append(b)
        # a dense element gives a denser ad matrix
        dense = a.element([(i % 5) - 2 for i in range(a.dim)])
        mats.append(ad_matrix(a, dense).scaled_integer()[1])
    return mats


def random_matrices(n, count, bits, seed=0):
    rng = random.Random(seed)
    lim = 2 ** bits
    return [[[rng.randint(-lim, lim) for _ in range(n)] for _ in range(n)] for _ in range(count)]


def workloads():
    cat = catalog_matrices(("sl:4", "so:1,4", "so:2,3", "poincare:3", "su:3", "gl:4"))
    small = random_matrices(12, 20, 4)
    wide = random_matrices(10, 20, 40)
    return {
        "catalog ad": cat,
        "random 12x12, 4-bit": small,
        "random 10x10, 40-bit": wide,
    }


def kernel_calls(mod, mats):
    return {
        "charpoly": lambda: [mod.charpoly_int(m) for m in mats],
        "rref": lambda: [mod.rref_int(m, len(m[0])) for m in mats],
        "matmul": lambda: [mod.matmul_int(m, m) for m in mats],
    }


def _plain(x):
    """Nested lists of ints, so both backends' results compare equal."""
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def sweep_time(pure: bool) -> float:
    code = (
        "import time\n"
        "from liessence import catalog\n"
        "from liessence.essential import is_essential\n"
        "t = time.perf_counter()\n"
        "for spec in catalog.GOLDEN_SPECS:\n"
        "    e = catalog.build(spec)\n"
        "    for x in e.golden_essential():\n"
        "        is_essential(e.algebra, x, crosscheck=True)\n"
        "print(time.perf_counter() - t)\n"
    )
    env = dict(os.environ)
    if pure:
        env["LIESSENCE_PURE_PYTHON"] = "1"
    else:
        env.pop("LIESSENCE_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sweep", action="store_true", help="also time the golden sweep")
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled extension not available; rebuild with `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'workload':<24}{'kernel':<10}{'python [ms]':>13}{'cython [ms]':>13}{'speedup':>9}")
    for name, mats in workloads().items():
        py_calls = kernel_calls(_pykernels, mats)
        c_calls = kernel_calls(_ckernels, mats)
        for kernel in py_calls:
            assert _plain(py_calls[kernel]()) == _plain(c_calls[kernel]()), (name, kernel)
            tp = best_of(py_calls[kernel], args.repeat) * 1e3
            tc = best_of(c_calls[kernel], args.repeat) * 1e3
            print(f"{name:<24}{kernel:<10}{tp:>13.2f}{tc:>13.2f}{tp / tc:>8.1f}x")

    if args.sweep:
        tp, tc = sweep_time(True), sweep_time(False)
        print(f"\ngolden sweep with cross-check: python {tp:.2f}s, cython {tc:.2f}s "
              f"({tp / tc:.2f}x)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
