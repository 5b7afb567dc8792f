"""Pure-Python kernels.

Reference implementation of the hot loops. ``_core.pyx`` mirrors every
function here operation for operation, so the two backends round
identically; keep them in lockstep when editing either file.

Inputs are assumed validated by the callers in :mod:`gammalcm.specfun`
and :mod:`gammalcm.series`.
"""

import math

from ._tables import BERNOULLI_EVEN, FACTORIALS

_NB = len(BERNOULLI_EVEN)
_INF = float("inf")


def _pow(base, expo):
    try:
        return math.pow(base, expo)
    except OverflowError:
        return _INF


def _exp(v):
    try:
        return math.exp(v)
    except OverflowError:
        return _INF


def _digamma_asym(z):
    inv2 = 1.0 / (z * z)
    w = inv2
    lead = math.log(z)
    terms = []
    prev = _INF
    for j in range(_NB):
        t = BERNOULLI_EVEN[j] / (2.0 * (j + 1)) * w
        at = abs(t)
        if at >= prev:
            break
        terms.append(t)
        prev = at
        if at < 1e-18 * lead:
            break
        w = w * inv2
    s = 0.0
    for t in reversed(terms):
        s += t
    return lead - 0.5 / z - s


def _polygamma_asym_abs(n, z):
    # |psi^(n)(z)| for n >= 1 and large z
    lead = FACTORIALS[n - 1] * math.pow(z, -n)
    half = 0.5 * FACTORIALS[n] * math.pow(z, -(n + 1))
    inv2 = 1.0 / (z * z)
    w = math.pow(z, -(n + 2))
    g = 0.5 * FACTORIALS[n + 1]
    terms = []
    prev = _INF
    for j in range(1, _NB + 1):
        t = BERNOULLI_EVEN[j - 1] * g * w
        at = abs(t)
        if at >= prev:
            break
        terms.append(t)
        prev = at
        if at < 1e-18 * lead:
            break
        m = 2 * j + n
        g = g * ((m * (m + 1.0)) / ((2 * j + 1.0) * (2 * j + 2.0)))
        w = w * inv2
    s = 0.0
    for t in reversed(terms):
        s += t
    return lead + (half + s)


def polygamma(n, x):
    """psi^(n)(x) for x > 0 and 0 <= n <= 30, no argument checking."""
    n = int(n)
    x = float(x)
    threshold = 10.0 + 0.5 * n
    nshift = 0
    if x < threshold:
        nshift = int(math.ceil(threshold - x))
    z = x + nshift
    corr = 0.0
    for i in range(nshift - 1, -1, -1):
        corr += _pow(x + i, -(n + 1.0))
    if n == 0:
        return _digamma_asym(z) - corr
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * (_polygamma_asym_abs(n, z) + FACTORIALS[n] * corr)


def polygamma_orders(x, nmax):
    return [polygamma(n, x) for n in range(nmax + 1)]


def series_mul(p, q):
    p = [float(v) for v in p]
    q = [float(v) for v in q]
    size = len(p)
    r = [0.0] * size
    for k in range(size):
        acc = 0.0
        for j in range(k + 1):
            acc += p[j] * q[k - j]
        r[k] = acc
    return r


def series_div(p, q):
    p = [float(v) for v in p]
    q = [float(v) for v in q]
    size = len(p)
    q0 = q[0]
    r = [0.0] * size
    for k in range(size):
        acc = 0.0
        for j in range(k):
            acc += r[j] * q[k - j]
        r[k] = (p[k] - acc) / q0
    return r


def series_log(p):
    p = [float(v) for v in p]
    size = len(p)
    p0 = p[0]
    r = [0.0] * size
    r[0] = math.log(p0)
    for k in range(1, size):
        acc = 0.0
        for j in range(1, k):
            acc += j * r[j] * p[k - j]
        r[k] = (p[k] - acc / k) / p0
    return r


def series_exp(p):
    p = [float(v) for v in p]
    size = len(p)
    r = [0.0] * size
    r[0] = _exp(p[0])
    for k in range(1, size):
        acc = 0.0
        for j in range(1, k + 1):
            acc += j * p[j] * r[k - j]
        r[k] = acc / k
    return r
