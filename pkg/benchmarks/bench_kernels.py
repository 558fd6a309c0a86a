"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Kernel timings call both implementations directly.  The end-to-end sweep is
run in a fresh interpreter per backend (selection happens at import time).
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from negn import _kernels_py as py

try:
    from negn import _ckernels as cy
except ImportError:
    sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

SWEEP = """
import time
from negn import _kernels
from negn.duality import exhaustive_corpus, random_corpus, run_checks
reps = exhaustive_corpus(5) + random_corpus(0, 9, 300)
t = time.perf_counter()
reports = run_checks(reps, ["prop1", "prop2", "z2"], workers=1)
assert all(r.holds for r in reports)
print(_kernels.BACKEND, time.perf_counter() - t)
"""


def bench(label, fn_py, fn_cy, number, repeat):
    t_py = min(timeit.repeat(fn_py, number=number, repeat=repeat)) / number
    t_cy = min(timeit.repeat(fn_cy, number=number, repeat=repeat)) / number
    print(f"{label:<38} {t_py * 1e6:>11.1f} us {t_cy * 1e6:>11.1f} us {t_py / t_cy:>7.2f}x")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':<38} {'python':>14} {'cython':>14} {'speedup':>8}")
    cases = [
        ((3, 3, 1), 4),
        ((6, 4, 3, 2, 2, 2, 2, 1, 1), 10),
        ((12, 9, 9, 7, 4, 4, 2, 1), 40),
        ((30, 30, 25, 20, 12, 6, 6, 3, 1), 200),
    ]
    for rows, n in cases:
        bench(f"hook_content_dim area={sum(rows)} N={n}",
              lambda: py.hook_content_dim(rows, n), lambda: cy.hook_content_dim(rows, n), 200, args.repeat)
    for rows, n in cases[:3]:
        bench(f"weyl_dim area={sum(rows)} N={n}",
              lambda: py.weyl_dim(rows, n), lambda: cy.weyl_dim(rows, n), 100, args.repeat)
    rng = random.Random(0)
    for m in (6, 12, 20):
        values = [rng.randint(0, 10**15) for _ in range(m)]
        bench(f"interp_consecutive nodes={m}",
              lambda: py.interp_consecutive(7, values), lambda: cy.interp_consecutive(7, values), 200, args.repeat)

    print("\nend-to-end prop1/prop2/z2 sweep (1131 reps, serial):")
    for env in ({"NEGN_PURE_PYTHON": "1"}, {}):
        out = subprocess.run([sys.executable, "-c", SWEEP], env={**os.environ, **env},
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"  {out[0]:<8} {float(out[1]):.3f} s")


if __name__ == "__main__":
    main()
