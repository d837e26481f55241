#!/usr/bin/env python3
"""Compare the compiled Gray-walk kernel against the pure-Python fallback.

Runs the same exhaustive minimum-distance enumerations through both code
paths and prints words/second plus the speedup. The distances must agree;
a mismatch aborts the run.
"""

import time

from bchbound.codes import code_from_defining_set
from bchbound.galois import build_field, nth_root
from bchbound.modring import coset_closure
from bchbound.wtdist import HAVE_COMPILED_KERNEL, min_distance

CASES = [
    # n, q, field degree, defining-set reps, label
    (15, 2, 4, [1, 3], "[15,7] BCH"),
    (23, 2, 11, [1], "[23,12] Golay"),
    (31, 2, 5, [1, 3, 5], "[31,16] cyclic"),
    (31, 2, 5, [1, 3], "[31,21] BCH"),
]


def run(code, force_python):
    t0 = time.perf_counter()
    res = min_distance(code, force_python=force_python)
    return res, time.perf_counter() - t0


def main():
    if not HAVE_COMPILED_KERNEL:
        print("compiled kernel unavailable; benchmarking fallback only")
    header = f"{'code':<16}{'words':>12}{'python':>12}{'kernel':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n, q, m, reps, label in CASES:
        root = nth_root(build_field(q, m), n)
        d_set = coset_closure(reps, n, q)
        code = code_from_defining_set(n, q, root, d_set)
        slow, t_py = run(code, force_python=True)
        line = f"{label:<16}{slow.enumerated:>12}{t_py:>11.3f}s"
        if HAVE_COMPILED_KERNEL:
            fast, t_c = run(code, force_python=False)
            assert fast.distance == slow.distance, "kernel disagreement"
            line += f"{t_c:>11.3f}s{t_py / t_c:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
