"""Compare the compiled kernels with the pure-Python fallback.

Run from the repository root after ``pip install -e .``::

    python3 benchmarks/bench_core.py [--repeat 5]

Both backends are imported directly, so the ``GAMMALCM_PURE_PYTHON``
switch does not matter here.  Results are also checked for bitwise equality.
"""

import argparse
import timeit

import numpy as np

from gammalcm import _pycore

try:
    from gammalcm import _core
except ImportError:  # extension not built
    _core = None


def _cases(rng):
    xs = rng.uniform(0.01, 50.0, 200)
    p = rng.uniform(-2.0, 2.0, 26)
    q = rng.uniform(-2.0, 2.0, 26)
    q[0] = 1.5
    return {
        "polygamma(n=0..15) x200": lambda m: [m.polygamma(n, x) for x in xs for n in range(0, 16, 3)],
        "polygamma_orders(25) x200": lambda m: [m.polygamma_orders(x, 25) for x in xs],
        "series_mul K=25 x200": lambda m: [m.series_mul(p, q) for _ in range(200)],
        "series_div K=25 x200": lambda m: [m.series_div(p, q) for _ in range(200)],
        "series_log K=25 x200": lambda m: [m.series_log(q) for _ in range(200)],
        "series_exp K=25 x200": lambda m: [m.series_exp(p) for _ in range(200)],
    }


def _same(a, b):
    return all(np.array_equal(np.asarray(u), np.asarray(v)) for u, v in zip(a, b))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    cases = _cases(np.random.default_rng(20240601))
    if _core is None:
        print("compiled extension unavailable; timing the Python fallback only")
    print(f"{'kernel':28s} {'python [ms]':>12s} {'compiled [ms]':>14s} {'speedup':>8s}  bitwise")
    for name, fn in cases.items():
        t_py = min(timeit.repeat(lambda: fn(_pycore), number=1, repeat=args.repeat)) * 1e3
        if _core is None:
            print(f"{name:28s} {t_py:12.2f} {'-':>14s} {'-':>8s}  -")
            continue
        t_c = min(timeit.repeat(lambda: fn(_core), number=1, repeat=args.repeat)) * 1e3
        same = _same(fn(_pycore), fn(_core))
        print(f"{name:28s} {t_py:12.2f} {t_c:14.2f} {t_py / t_c:7.1f}x  {'yes' if same else 'NO'}")


if __name__ == "__main__":
    main()
