"""Independent reference computations used by the tests.

None of these share code with the package: sums are done by brute force,
Bernoulli numbers by exact rational recurrence, and multiprecision values
come from mpmath.
"""

from fractions import Fraction
from functools import lru_cache
import math

import mpmath
import numpy as np

CHUNK = 10_000_000


@lru_cache(maxsize=None)
def inverse_square_sum(start=1, n_terms=10**8):
    """``sum_{m >= start} 1/m^2`` from ``n_terms`` explicit terms plus the tail.

    The tail ``sum_{m > N} 1/m^2 = 1/N - 1/(2N^2) + 1/(6N^3) - ...`` is
    added in closed form; with ``N = 10^8`` its truncation error is ~1e-40.
    """
    last = start + n_terms - 1
    partial = []
    hi = last
    while hi >= start:  # smallest terms first
        lo = max(start, hi - CHUNK + 1)
        m = np.arange(lo, hi + 1, dtype=np.float64)
        partial.append(float(np.sum(1.0 / (m * m))))
        hi = lo - 1
    big = float(last)
    tail = 1.0 / big - 0.5 / big**2 + 1.0 / (6.0 * big**3)
    return math.fsum(partial + [tail])


@lru_cache(maxsize=None)
def bernoulli_exact(n):
    """Exact ``B_0..B_n`` from ``sum_{k=0}^{m} C(m+1, k) B_k = 0``."""
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, k) * table[k] for k in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def euler_gamma_by_euler_maclaurin(cutoff=50, terms=8):
    """Euler's constant from ``H_{N-1} - ln N + 1/(2N) + sum_j B_2j / (2j N^2j)``."""
    bern = bernoulli_exact(2 * terms)
    harmonic = math.fsum(1.0 / m for m in range(1, cutoff))
    corr = [float(bern[2 * j] / (2 * j)) / cutoff ** (2 * j) for j in range(1, terms + 1)]
    return math.fsum([harmonic, -math.log(cutoff), 0.5 / cutoff] + corr)


def brute_convolution(left, right):
    """Truncated Cauchy product by an explicit double loop."""
    size = min(len(left), len(right))
    out = [0.0] * size
    for i in range(size):
        for j in range(size):
            if i + j < size:
                out[i + j] += left[i] * right[j]
    return out


# multiprecision references ---------------------------------------------------

mpmath.mp.dps = 40


def mp_lngamma(x):
    return float(mpmath.loggamma(mpmath.mpf(x)))


def mp_polygamma(order, x):
    return float(mpmath.polygamma(order, mpmath.mpf(x)))


def mp_derivative(func, x, order):
    """``order``-th derivative of an mpmath-valued ``func`` at ``x``."""
    return float(mpmath.diff(func, mpmath.mpf(x), order))
