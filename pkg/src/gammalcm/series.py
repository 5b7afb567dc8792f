"""Truncated Taylor series at a fixed expansion point.

A :class:`PolySeries` holds ``coeffs[j] = f^(j)(x0) / j!`` for
``j = 0..order``.  Arithmetic combines series with the same expansion point
and order; ``ln_series`` / ``exp_series`` lift between ``f`` and ``ln f``.
Derivatives of arbitrary order come out of :func:`derivative` exactly as
stored, with no finite differencing involved.
"""

from dataclasses import dataclass
import math
import warnings

import numpy as np

from ._backend import core
from ._tables import FACTORIALS
from .errors import (
    CoefficientGrowthWarning,
    DomainError,
    SeriesMismatchError,
    UnsupportedOrderError,
)
from .specfun import ln_gamma, polygamma_orders

__all__ = [
    "MAX_ORDER",
    "GROWTH_GUARD",
    "PolySeries",
    "add",
    "sub",
    "scale",
    "mul",
    "div",
    "ln_series",
    "exp_series",
    "from_lngamma",
    "from_digamma",
    "from_log_linear",
    "quotient_series",
    "derivative",
]

MAX_ORDER = 25
GROWTH_GUARD = 1e150


def _check_order(K):
    if isinstance(K, bool) or int(K) != K or K < 0:
        raise ValueError(f"series order must be a nonnegative integer, got {K!r}")
    K = int(K)
    if K > MAX_ORDER:
        raise UnsupportedOrderError(f"series order {K} exceeds the cap {MAX_ORDER}")
    return K


def _guard(coeffs):
    peak = float(np.max(np.abs(coeffs))) if coeffs.size else 0.0
    if not peak <= GROWTH_GUARD:
        warnings.warn(
            f"series coefficient magnitude {peak:.3g} exceeds {GROWTH_GUARD:.0e}",
            CoefficientGrowthWarning,
            stacklevel=3,
        )


@dataclass(frozen=True, eq=False)
class PolySeries:
    """Taylor coefficients of a function about ``x0``.

    ``coeffs`` is stored as a read-only float64 array of length ``order + 1``.
    """

    x0: float
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.float64, copy=True)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        _check_order(c.size - 1)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "x0", float(self.x0))

    @property
    def order(self):
        return self.coeffs.size - 1

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, x0, K, value):
        c = np.zeros(_check_order(K) + 1)
        c[0] = value
        return cls(x0, c)

    @classmethod
    def zero(cls, x0, K):
        return cls.constant(x0, K, 0.0)

    @classmethod
    def one(cls, x0, K):
        return cls.constant(x0, K, 1.0)

    @classmethod
    def identity(cls, x0, K, slope=1.0, intercept=0.0):
        """Series of ``x -> slope * x + intercept`` about ``x0``."""
        c = np.zeros(_check_order(K) + 1)
        c[0] = slope * x0 + intercept
        if K >= 1:
            c[1] = slope
        return cls(x0, c)

    @classmethod
    def from_derivatives(cls, x0, derivs):
        d = np.asarray(derivs, dtype=np.float64)
        _check_order(d.size - 1)
        return cls(x0, d / np.asarray(FACTORIALS[: d.size]))

    # comparisons / arithmetic --------------------------------------------

    def _compatible(self, other):
        if not isinstance(other, PolySeries):
            raise TypeError(f"cannot combine PolySeries with {type(other).__name__}")
        if other.x0 != self.x0:
            raise SeriesMismatchError(f"expansion points differ: {self.x0} vs {other.x0}")
        if other.order != self.order:
            raise SeriesMismatchError(f"orders differ: {self.order} vs {other.order}")

    def _coerce(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return PolySeries.constant(self.x0, self.order, float(other))
        self._compatible(other)
        return other

    def __add__(self, other):
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, self._coerce(other))

    def __rsub__(self, other):
        return sub(self._coerce(other), self)

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(self, float(other))
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(self, 1.0 / float(other))
        return div(self, other)

    def __rtruediv__(self, other):
        return div(self._coerce(other), self)

    def __getitem__(self, j):
        return float(self.coeffs[j])

    def __len__(self):
        return self.coeffs.size

    def __repr__(self):
        return f"PolySeries(x0={self.x0!r}, coeffs={self.coeffs.tolist()!r})"

    def derivative(self, k):
        return derivative(self, k)

    def derivatives(self):
        """All stored derivatives ``f^(k)(x0)``, k = 0..order."""
        return self.coeffs * np.asarray(FACTORIALS[: self.coeffs.size])


def _make(x0, coeffs):
    c = np.asarray(coeffs, dtype=np.float64)
    _guard(c)
    return PolySeries(x0, c)


def add(p, q):
    p._compatible(q)
    return _make(p.x0, p.coeffs + q.coeffs)


def sub(p, q):
    p._compatible(q)
    return _make(p.x0, p.coeffs - q.coeffs)


def scale(p, factor):
    return _make(p.x0, p.coeffs * float(factor))


def mul(p, q):
    """Cauchy product truncated at the common order."""
    p._compatible(q)
    return _make(p.x0, core.series_mul(p.coeffs, q.coeffs))


def div(p, q):
    """Series ``r`` with ``r * q == p`` through the common order."""
    p._compatible(q)
    if q.coeffs[0] == 0.0:
        raise ZeroDivisionError("series division needs a nonzero constant term")
    return _make(p.x0, core.series_div(p.coeffs, q.coeffs))


def ln_series(p):
    """Series of ``ln f`` from the series of ``f``; needs ``f(x0) > 0``."""
    if not p.coeffs[0] > 0.0:
        raise DomainError(f"ln_series needs a positive constant term, got {p.coeffs[0]!r}")
    return _make(p.x0, core.series_log(p.coeffs))


def exp_series(p):
    return _make(p.x0, core.series_exp(p.coeffs))


def derivative(p, k):
    """``f^(k)(x0) = k! * coeffs[k]``."""
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise ValueError(f"derivative order must be a nonnegative integer, got {k!r}")
    if k > p.order:
        raise UnsupportedOrderError(f"derivative order {k} exceeds series order {p.order}")
    return FACTORIALS[int(k)] * float(p.coeffs[int(k)])


def from_lngamma(x0, shift, K, scale=1.0):
    """Series of ``u -> ln Gamma(scale * (x0 + u) + shift)`` about ``u = 0``.

    With the default ``scale`` this is ``ln Gamma(x0 + shift + u)``, whose
    coefficients are ``ln Gamma(x0 + shift)`` followed by
    ``psi^(j-1)(x0 + shift) / j!``.
    """
    K = _check_order(K)
    z0 = scale * x0 + shift
    if not z0 > 0.0:
        raise DomainError(f"ln Gamma argument {z0!r} is not positive")
    c = np.empty(K + 1)
    c[0] = ln_gamma(z0)
    if K:
        psi = polygamma_orders(z0, K - 1)
        powers = scale ** np.arange(1, K + 1) if scale != 1.0 else 1.0
        c[1:] = psi * powers / np.asarray(FACTORIALS[1 : K + 1])
    return _make(x0, c)


def from_digamma(x0, shift, K, scale=1.0):
    """Series of ``u -> psi(scale * (x0 + u) + shift)``."""
    K = _check_order(K)
    z0 = scale * x0 + shift
    if not z0 > 0.0:
        raise DomainError(f"digamma argument {z0!r} is not positive")
    psi = polygamma_orders(z0, K)
    powers = scale ** np.arange(K + 1) if scale != 1.0 else 1.0
    return _make(x0, psi * powers / np.asarray(FACTORIALS[: K + 1]))


def from_log_linear(x0, K, slope=1.0, intercept=0.0):
    """Series of ``u -> ln(slope * (x0 + u) + intercept)``, closed form."""
    K = _check_order(K)
    z0 = slope * x0 + intercept
    if not z0 > 0.0:
        raise DomainError(f"logarithm argument {z0!r} is not positive")
    c = np.empty(K + 1)
    c[0] = math.log(z0)
    r = slope / z0
    j = np.arange(1, K + 1)
    c[1:] = -((-r) ** j) / j
    return _make(x0, c)


_QUOTIENT_NODES, _QUOTIENT_WEIGHTS = np.polynomial.legendre.leggauss(32)
_QUOTIENT_NODES = 0.5 * (_QUOTIENT_NODES + 1.0)
_QUOTIENT_WEIGHTS = 0.5 * _QUOTIENT_WEIGHTS


def quotient_series(x0, K, r, numerator, derivs, radius):
    """Series of the divided difference ``D(x) = [G(x) - G(r)] / (x - r)`` about ``x0``.

    Parameters
    ----------
    numerator : callable ``(x0, K) -> PolySeries``
        Series of ``G(x) - G(r)`` about ``x0``.
    derivs : callable ``(z, K) -> array``
        ``[G'(z), G''(z), ..., G^(K+1)(z)]``.
    radius : float
        Distance from ``r`` to the nearest singularity of ``G``.

    Dividing by ``x - r`` loses roughly ``(radius/|x0 - r|)^k`` in relative
    accuracy at order ``k``, so close to ``r`` the coefficients are taken
    from ``D^(k)(x0) = int_0^1 t^k G^(k+1)(r + t (x0 - r)) dt`` with 32-point
    Gauss-Legendre instead.
    """
    K = _check_order(K)
    d = x0 - r
    if -0.5 * radius <= d <= radius:
        powers = _QUOTIENT_NODES[:, None] ** np.arange(K + 1)[None, :]
        g = np.array([derivs(r + t * d, K) for t in _QUOTIENT_NODES])
        c = (_QUOTIENT_WEIGHTS[:, None] * powers * g).sum(axis=0)
        return _make(x0, c / np.asarray(FACTORIALS[: K + 1]))
    return div(numerator(x0, K), PolySeries.identity(x0, K, intercept=-r))
