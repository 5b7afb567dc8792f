"""Closed-form derivative machinery for ``h(x) = [c Gamma(x+a)/Gamma(x+b)]^(1/x)``.

With ``F(x) = ln c + ln Gamma(x+a) - ln Gamma(x+b)`` one has
``ln h = F(x)/x`` and, for every order ``k >= 1``,

    (-1)^k [ln h]^(k)(x) = k!/x^(k+1) * H_k(x),
    H_k(x) = sum_{i=0}^{k} (-x)^i/i! * F^(i)(x),

so the sign of every log-derivative is the sign of ``H_k``.  Because
``H_k(0) = F(0)`` and ``H_k'(x) = x^k/k! * [(-1)^k psi^(k)(x+a) - (-1)^k psi^(k)(x+b)]``,
``H_k`` is monotone in ``x`` with the sign of ``a - b``; hence

* ``a > b`` and ``c >= Gamma(b)/Gamma(a)``: ``h`` is logarithmically
  completely monotonic on ``(0, inf)``;
* ``a < b`` and ``c <= Gamma(b)/Gamma(a)``: ``1/h`` is.

:func:`classify` sorts parameters into those regions and
:func:`find_violation` looks for a negative log-derivative when they fail.
"""

from dataclasses import dataclass
import enum
import math
import warnings

import numpy as np

from ._tables import FACTORIALS
from .errors import ConditioningWarning, DomainError, UnsupportedOrderError
from .families import GeneralRatio
from .series import MAX_ORDER, derivative
from .specfun import _adaptive, gamma_ratio, ln_gamma, polygamma

__all__ = [
    "Region",
    "TheoremRegion",
    "TheoremEvaluation",
    "CLASSIFY_GUARD",
    "h_capital",
    "h_capital_terms",
    "h_capital_derivative",
    "kth_log_derivative",
    "series_kth_log_derivative",
    "evaluate_identity",
    "classify",
    "violation_tolerance",
    "violation_grid",
    "find_violation",
]

CLASSIFY_GUARD = 1e-12
CONDITIONING_RATIO = 1e6


class Region(enum.Enum):
    CASE1_LCM = "Case1LCM"
    CASE2_RECIPROCAL_LCM = "Case2ReciprocalLCM"
    UNDETERMINED = "Undetermined"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TheoremRegion:
    region: Region
    threshold: float
    margin: float


@dataclass(frozen=True)
class TheoremEvaluation:
    a: float
    b: float
    c: float
    k: int
    x: float
    h_value: float
    identity_lhs: float
    identity_rhs: float

    @property
    def relative_gap(self):
        scale = max(abs(self.identity_lhs), abs(self.identity_rhs))
        return 0.0 if scale == 0.0 else abs(self.identity_lhs - self.identity_rhs) / scale


def _params(a, b, c):
    out = []
    for name, v in (("a", a), ("b", b), ("c", c)):
        v = float(v)
        if not (math.isfinite(v) and v > 0.0):
            raise DomainError(f"{name} must be positive and finite, got {v!r}")
        out.append(v)
    return out


def _order(k, lowest=1):
    if isinstance(k, bool) or int(k) != k:
        raise TypeError(f"order must be an integer, got {k!r}")
    k = int(k)
    if k < lowest:
        raise DomainError(f"order must be >= {lowest}, got {k}")
    if k > MAX_ORDER:
        raise UnsupportedOrderError(f"order {k} exceeds the cap {MAX_ORDER}")
    return k


def h_capital_terms(a, b, c, k, x):
    """The individual summands of ``H_k(x)`` (before compensated summation)."""
    a, b, c = _params(a, b, c)
    k = _order(k)
    x = float(x)
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"x must be finite and >= 0, got {x!r}")
    terms = [math.log(c), ln_gamma(x + a), -ln_gamma(x + b)]
    weight = 1.0
    for i in range(1, k + 1):
        weight *= -x / i  # (-x)^i / i!
        if weight == 0.0:
            break
        terms.append(weight * (polygamma(i - 1, x + a) - polygamma(i - 1, x + b)))
    return terms


def h_capital(a, b, c, k, x):
    """``H_k(x) = ln c + ln Gamma(x+a) - ln Gamma(x+b) + sum_{i=1}^k (-x)^i/i! [psi^(i-1)(x+a) - psi^(i-1)(x+b)]``.

    Summed with :func:`math.fsum`.  When the largest summand exceeds the
    result by a factor 1e6 a :class:`ConditioningWarning` is emitted and the
    value is recomputed as ``H_k(0) + int_0^x H_k'(s) ds``, which involves no
    cancellation between the summands.
    """
    terms = h_capital_terms(a, b, c, k, x)
    value = math.fsum(terms)
    peak = max(abs(t) for t in terms)
    if peak > CONDITIONING_RATIO * abs(value):
        warnings.warn(
            f"H_k summands up to {peak:.3g} cancel to {value:.3g}; integrating H_k' instead",
            ConditioningWarning,
            stacklevel=2,
        )
        if float(x) > 0.0:
            value = _h_capital_by_integral(a, b, c, k, x)
    return value


def _h_capital_by_integral(a, b, c, k, x):
    a, b, c = _params(a, b, c)
    start = math.fsum([math.log(c), ln_gamma(a), -ln_gamma(b)])
    sign = -1.0 if k % 2 else 1.0
    inv_fact = 1.0 / FACTORIALS[k]

    def slope(s):
        return np.array(
            [si**k * inv_fact * (sign * polygamma(k, si + a) - sign * polygamma(k, si + b)) for si in s]
        )

    rise, _ = _adaptive(slope, 0.0, float(x), rtol=1e-13, budget=500)
    return start + rise


def h_capital_derivative(a, b, c, k, x):
    """``H_k'(x) = x^k/k! * [(-1)^k psi^(k)(x+a) - (-1)^k psi^(k)(x+b)]``."""
    a, b, c = _params(a, b, c)
    k = _order(k)
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    sign = -1.0 if k % 2 else 1.0
    return x**k / FACTORIALS[k] * (sign * polygamma(k, x + a) - sign * polygamma(k, x + b))


def kth_log_derivative(a, b, c, k, x):
    """``(-1)^k [ln h]^(k)(x)`` via ``k!/x^(k+1) * H_k(x)``."""
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    k = _order(k)
    return FACTORIALS[k] / x ** (k + 1) * h_capital(a, b, c, k, x)


def series_kth_log_derivative(a, b, c, k, x):
    """Same quantity as :func:`kth_log_derivative`, from the Taylor-series engine."""
    k = _order(k)
    p = GeneralRatio(a, b, c).ln_series(x, k)
    sign = -1.0 if k % 2 else 1.0
    return sign * derivative(p, k)


def evaluate_identity(a, b, c, k, x):
    """Both sides of the log-derivative identity at one point."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConditioningWarning)
        hv = h_capital(a, b, c, k, x)
    rhs = FACTORIALS[int(k)] / float(x) ** (int(k) + 1) * hv
    lhs = series_kth_log_derivative(a, b, c, k, x)
    return TheoremEvaluation(float(a), float(b), float(c), int(k), float(x), hv, lhs, rhs)


def classify(a, b, c):
    """Place ``(a, b, c)`` in the theorem's sufficient regions.

    A margin within a relative ``1e-12`` of zero counts as equality, which
    both cases admit.
    """
    a, b, c = _params(a, b, c)
    threshold = gamma_ratio(b, a)
    margin = c - threshold
    tie = abs(margin) <= CLASSIFY_GUARD * threshold
    if a > b and (margin >= 0.0 or tie):
        region = Region.CASE1_LCM
    elif a < b and (margin <= 0.0 or tie):
        region = Region.CASE2_RECIPROCAL_LCM
    else:
        region = Region.UNDETERMINED
    return TheoremRegion(region, threshold, margin)


def violation_tolerance(c):
    return 1e-10 * (1.0 + abs(math.log(c)))


def violation_grid(x_max, points=400, x_min=1e-8):
    """Log-spaced scan points on ``[x_min, x_max]``, ascending."""
    return np.geomspace(x_min, x_max, points)


def find_violation(a, b, c, k, x_max, points=400):
    """Smallest scanned ``x`` where ``(-1)^k [ln h]^(k)(x) < -tol``, or ``None``.

    The scan runs over 400 log-spaced points from 1e-8 up to ``x_max``; a
    reversed inequality first shows up as ``x -> 0+`` whenever ``H_k(0) < 0``.
    Returns ``(x, value)``.
    """
    a, b, c = _params(a, b, c)
    k = _order(k)
    x_max = float(x_max)
    if not (math.isfinite(x_max) and x_max > 1e-8):
        raise DomainError(f"x_max must exceed 1e-8, got {x_max!r}")
    tol = violation_tolerance(c)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConditioningWarning)
        for x in violation_grid(x_max, points):
            value = kth_log_derivative(a, b, c, k, float(x))
            if value < -tol:
                return float(x), value
    return None
