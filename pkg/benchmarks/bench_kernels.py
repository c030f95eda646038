"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from minrank import _kernels_py

try:
    from minrank import _kernels
except ImportError:
    _kernels = None

COUNTEREXAMPLE = [6, 3, 0, 1, 3, 1, 1, 0, 0, 1, 2, 3, 1, 0, 1, 1]
COUNTEREXAMPLE_UNKNOWNS = [2, 7, 8, 13]


def cases(rng):
    ranks = [[rng.randrange(101) for _ in range(64)] for _ in range(200)]
    # 5**8 = 390625 assignments
    flat = [rng.randrange(5) for _ in range(20)]
    unknowns = sorted(rng.sample(range(20), 8))
    return [
        ("rank of 200 random 8x8 over GF(101)",
         lambda k: [k.rank_mod_p(m, 8, 8, 101) for m in ranks], False),
        ("counterexample over GF(11), 14641 assignments",
         lambda k: k.min_rank_assignments(COUNTEREXAMPLE, 4, 4, COUNTEREXAMPLE_UNKNOWNS, 11), True),
        ("4x5 over GF(5), 8 unknowns",
         lambda k: k.min_rank_assignments(flat, 4, 5, unknowns, 5), True),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled kernels not built; timing the Python fallback only")
    for name, fn, slow in cases(random.Random(args.seed)):
        results, times = [], {}
        for label, mod in backends:
            repeat = 1 if label == "python" and slow else args.repeat
            times[label] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=repeat))
            results.append(fn(mod))
        assert all(r == results[0] for r in results), f"backends disagree on {name}"
        line = "  ".join(f"{k} {v * 1000:9.1f} ms" for k, v in times.items())
        if len(times) == 2:
            line += f"  speedup {times['python'] / times['cython']:.0f}x"
        print(f"{name:48s} {line}")


if __name__ == "__main__":
    main()
