"""Catalog of gamma-ratio function families.

Every family is an immutable dataclass exposing

* ``domain``            -- open interval ``(lo, hi)`` of admissible ``x``;
* ``removable_points``  -- points where the formula is 0/0 and a limit value
  is used instead;
* ``ln_value(x)``       -- ``ln f(x)``;
* ``ln_series(x0, K)``  -- :class:`~gammalcm.series.PolySeries` of ``ln f``;
* ``series(x0, K)``     -- series of ``f`` itself;
* ``text()``            -- canonical text form, e.g. ``general-ratio:a=1,b=0.5,c=2``.

:class:`MeasureRep` (a finite Stieltjes transform) implements the same
interface so that the checker can treat it like any other family.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from . import series as S
from .errors import DomainError, ParseError, RemovablePointError
from .specfun import ln_gamma, polygamma, polygamma_orders

__all__ = [
    "REMOVABLE_GAP",
    "Family",
    "CodingGain",
    "GeneralRatio",
    "ShiftedRootRatio",
    "QiBerg",
    "GstRatio",
    "GammaShiftBase",
    "TabulatedLogBase",
    "GeneralPowerRatio",
    "HBeta",
    "PAlpha",
    "HAlphaY",
    "PsiRatio",
    "MeasureRep",
    "FAMILIES",
    "evaluate",
    "ln_series_at",
    "stieltjes_evaluate",
    "stieltjes_series_at",
    "stieltjes_ln_series_at",
    "parse_family",
    "parse_number",
    "NAMED_CONSTANTS",
]

REMOVABLE_GAP = 1e-3
EULER_GAMMA = -polygamma(0, 1.0)
TWO_SQRT_PI = 2.0 * math.sqrt(math.pi)

NAMED_CONSTANTS = {
    "sqrtpi": math.sqrt(math.pi),
    "2sqrtpi": TWO_SQRT_PI,
}


def _real(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating, np.integer)):
        raise TypeError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _fmt(v):
    return repr(float(v))


class Family:
    """Shared evaluation logic; subclasses supply the formulas."""

    name = ""
    params = ()

    @property
    def domain(self):
        return (0.0, math.inf)

    @property
    def removable_points(self):
        return ()

    def _check_x(self, x):
        x = _real(x, "x")
        lo, hi = self.domain
        if not lo < x < hi:
            raise DomainError(f"x = {x!r} outside the domain ({lo}, {hi}) of {self.text()}")
        return x

    def _check_series_point(self, x0):
        x0 = self._check_x(x0)
        for r in self.removable_points:
            if abs(x0 - r) < REMOVABLE_GAP:
                raise RemovablePointError(
                    f"x0 = {x0!r} lies within {REMOVABLE_GAP} of the removable point {r!r}"
                )
        return x0

    def evaluate(self, x):
        return math.exp(self.ln_value(x))

    def ln_value(self, x):
        x = self._check_x(x)
        for r in self.removable_points:
            if x == r:
                return self._ln_limit(x)
        return self._ln_generic(x)

    def ln_series(self, x0, K):
        x0 = self._check_series_point(x0)
        return self._ln_series(x0, K)

    def series(self, x0, K):
        return S.exp_series(self.ln_series(x0, K))

    def text(self):
        args = ",".join(f"{p}={_fmt(getattr(self, p))}" for p in self.params)
        return f"{self.name}:{args}" if args else self.name

    def _ln_limit(self, x):  # pragma: no cover - only families with removable points
        raise NotImplementedError

    def _ln_generic(self, x):
        raise NotImplementedError

    def _ln_series(self, x0, K):
        raise NotImplementedError


def _lg_quotient_series(x0, K, shifts, weights, r, radius):
    """Series of ``[G(x) - G(r)] / (x - r)`` with ``G(x) = sum_m w_m ln Gamma(x + shift_m)``."""

    def numerator(x0, K):
        acc = S.PolySeries.zero(x0, K)
        for sh, w in zip(shifts, weights):
            acc = acc + S.from_lngamma(x0, sh, K) * w
        return acc - math.fsum(w * ln_gamma(r + sh) for sh, w in zip(shifts, weights))

    def derivs(z, K):
        return sum(w * polygamma_orders(z + sh, K) for sh, w in zip(shifts, weights))

    return S.quotient_series(x0, K, r, numerator, derivs, radius)


def _lg1p_over_x_series(x0, K, offset=0.0):
    # series of y -> ln Gamma(1 + y) / y at y = x0 + offset
    return _lg_quotient_series(x0, K, (1.0 + offset,), (1.0,), -offset, 1.0)


def _lg_over_x_value(y):
    # ln Gamma(1 + y) / y with its limit psi(1) at y = 0
    if y == 0.0:
        return -EULER_GAMMA
    return ln_gamma(1.0 + y) / y


@dataclass(frozen=True)
class CodingGain(Family):
    """``[2 sqrt(pi) Gamma(x+1) / Gamma(x+1/2)]^(1/x)`` on ``(0, inf)``.

    Evaluated in its three-factor form, each factor raised to ``1/x``
    separately, so that it is an independent route to
    ``GeneralRatio(1, 1/2, 2 sqrt(pi))``.
    """

    name = "coding-gain"

    def _ln_generic(self, x):
        return math.log(TWO_SQRT_PI) / x + ln_gamma(x + 1.0) / x - ln_gamma(x + 0.5) / x

    def _ln_series(self, x0, K):
        ident = S.PolySeries.identity(x0, K)
        const = S.PolySeries.constant(x0, K, math.log(TWO_SQRT_PI))
        return const / ident + S.from_lngamma(x0, 1.0, K) / ident - S.from_lngamma(x0, 0.5, K) / ident


@dataclass(frozen=True)
class GeneralRatio(Family):
    """``[c Gamma(x+a) / Gamma(x+b)]^(1/x)`` with ``a, b, c > 0``."""

    a: float
    b: float
    c: float
    name = "general-ratio"
    params = ("a", "b", "c")

    def __post_init__(self):
        for p in self.params:
            v = _real(getattr(self, p), p)
            if v <= 0.0:
                raise DomainError(f"{p} must be positive, got {v!r}")
            object.__setattr__(self, p, v)

    def _ln_generic(self, x):
        return math.fsum([math.log(self.c), ln_gamma(x + self.a), -ln_gamma(x + self.b)]) / x

    def numerator_series(self, x0, K):
        """Series of ``ln c + ln Gamma(x+a) - ln Gamma(x+b)``."""
        const = S.PolySeries.constant(x0, K, math.log(self.c))
        return const + (S.from_lngamma(x0, self.a, K) - S.from_lngamma(x0, self.b, K))

    def _ln_series(self, x0, K):
        # F(0)/x plus the divided difference [F(x) - F(0)]/x; near x = 0 the
        # latter comes from quadrature so that F(0) ~ 0 loses no accuracy
        a, b = self.a, self.b
        at_zero = math.fsum([math.log(self.c), ln_gamma(a), -ln_gamma(b)])

        def numerator(x0, K):
            return self.numerator_series(x0, K) - at_zero

        def derivs(z, K):
            return polygamma_orders(z + a, K) - polygamma_orders(z + b, K)

        ident = S.PolySeries.identity(x0, K)
        quotient = S.quotient_series(x0, K, 0.0, numerator, derivs, min(a, b))
        return quotient + S.PolySeries.constant(x0, K, at_zero) / ident

    def reciprocal(self):
        """Parameters of ``1/h``: swap ``a`` and ``b``, invert ``c``."""
        return GeneralRatio(self.b, self.a, 1.0 / self.c)


@dataclass(frozen=True)
class ShiftedRootRatio(Family):
    """``Gamma(x+alpha+1)^(1/(x+alpha)) / Gamma(x+1)^(1/x)``.

    The two root exponents are 0/0 at ``x = 0`` and ``x = -alpha``; there
    ``ln Gamma(1+y)/y`` is replaced by its limit ``psi(1)``.
    """

    alpha: float
    name = "shifted-root-ratio"
    params = ("alpha",)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _real(self.alpha, "alpha"))

    @property
    def domain(self):
        return (max(-1.0, -1.0 - self.alpha), math.inf)

    @property
    def removable_points(self):
        lo = self.domain[0]
        pts = {0.0, -self.alpha}
        return tuple(sorted(p for p in pts if p > lo))

    def ln_value(self, x):
        x = self._check_x(x)
        return _lg_over_x_value(x + self.alpha) - _lg_over_x_value(x)

    def _ln_series(self, x0, K):
        return _lg1p_over_x_series(x0, K, self.alpha) - _lg1p_over_x_series(x0, K)


@dataclass(frozen=True)
class QiBerg(Family):
    """``Gamma(x+1)^(1/x) / x * (1 + 1/x)^x`` on ``(0, inf)``."""

    name = "qi-berg"

    def _ln_generic(self, x):
        return ln_gamma(x + 1.0) / x - math.log(x) + x * math.log1p(1.0 / x)

    def _ln_series(self, x0, K):
        ident = S.PolySeries.identity(x0, K)
        log_x = S.from_log_linear(x0, K)
        log_x1 = S.from_log_linear(x0, K, intercept=1.0)
        return _lg1p_over_x_series(x0, K) - log_x + ident * (log_x1 - log_x)


def _positive_linear_interval(coefs):
    # {x : 1 + c x > 0 for all c in coefs}
    lo, hi = -math.inf, math.inf
    for c in coefs:
        if c > 0:
            lo = max(lo, -1.0 / c)
        elif c < 0:
            hi = min(hi, -1.0 / c)
    return lo, hi


@dataclass(frozen=True)
class GstRatio(Family):
    """``Gamma(1+t x)^s / Gamma(1+s x)^t`` with ``s != t``."""

    s: float
    t: float
    name = "gst-ratio"
    params = ("s", "t")

    def __post_init__(self):
        object.__setattr__(self, "s", _real(self.s, "s"))
        object.__setattr__(self, "t", _real(self.t, "t"))
        if self.s == self.t:
            raise DomainError("gst-ratio needs s != t")

    @property
    def domain(self):
        return _positive_linear_interval((self.s, self.t))

    def _ln_generic(self, x):
        return self.s * ln_gamma(1.0 + self.t * x) - self.t * ln_gamma(1.0 + self.s * x)

    def _ln_series(self, x0, K):
        num = S.from_lngamma(x0, 1.0, K, scale=self.t) * self.s
        den = S.from_lngamma(x0, 1.0, K, scale=self.s) * self.t
        return num - den


@dataclass(frozen=True)
class GammaShiftBase:
    """Base function ``y -> Gamma(y + shift)``."""

    shift: float = 1.0
    kind = "gamma"

    def __post_init__(self):
        object.__setattr__(self, "shift", _real(self.shift, "shift"))

    @property
    def interval(self):
        return (-self.shift, math.inf)

    def ln_value(self, y):
        return ln_gamma(y + self.shift)

    def ln_series(self, x0, K, slope):
        return S.from_lngamma(x0, self.shift, K, scale=slope)

    def text(self):
        return f"base=gamma,shift={_fmt(self.shift)}"


@dataclass(frozen=True)
class TabulatedLogBase:
    """Base function with tabulated log-coefficients: ``ln f(y) = sum_j coeffs[j] y^j``."""

    coeffs: tuple
    kind = "tab"

    def __post_init__(self):
        cs = tuple(_real(c, "coeffs") for c in self.coeffs)
        if not cs:
            raise DomainError("tabulated base needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def interval(self):
        return (-math.inf, math.inf)

    def ln_value(self, y):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def ln_series(self, x0, K, slope):
        y = S.PolySeries.identity(x0, K, slope=slope)
        acc = S.PolySeries.zero(x0, K)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def text(self):
        return "base=tab,coeffs=" + ";".join(_fmt(c) for c in self.coeffs)


@dataclass(frozen=True)
class GeneralPowerRatio(Family):
    """``f(b x)^a / f(a x)^b`` for an enumerated positive base function ``f``."""

    a: float
    b: float
    base: object = field(default_factory=GammaShiftBase)
    name = "power-ratio"
    params = ("a", "b")

    def __post_init__(self):
        object.__setattr__(self, "a", _real(self.a, "a"))
        object.__setattr__(self, "b", _real(self.b, "b"))
        if not isinstance(self.base, (GammaShiftBase, TabulatedLogBase)):
            raise TypeError("base must be a GammaShiftBase or TabulatedLogBase")

    @property
    def domain(self):
        lo_f, hi_f = self.base.interval
        lo, hi = -math.inf, math.inf
        for m in (self.a, self.b):
            # m * x must lie in (lo_f, hi_f)
            if m > 0:
                lo, hi = max(lo, lo_f / m), min(hi, hi_f / m)
            elif m < 0:
                lo, hi = max(lo, hi_f / m), min(hi, lo_f / m)
            elif not lo_f < 0.0 < hi_f:
                return (0.0, 0.0)
        return (lo, hi)

    def _ln_generic(self, x):
        return self.a * self.base.ln_value(self.b * x) - self.b * self.base.ln_value(self.a * x)

    def _ln_series(self, x0, K):
        return self.base.ln_series(x0, K, self.b) * self.a - self.base.ln_series(x0, K, self.a) * self.b

    def text(self):
        return f"{self.name}:a={_fmt(self.a)},b={_fmt(self.b)},{self.base.text()}"


@dataclass(frozen=True)
class HBeta(Family):
    """``[Gamma(beta+t)/Gamma(beta+s) * Gamma(x+s)/Gamma(x+t)]^(1/(x-beta))``.

    Equal to ``exp[psi(beta+s) - psi(beta+t)]`` at ``x = beta``.
    """

    s: float
    t: float
    beta: float
    name = "h-beta"
    params = ("s", "t", "beta")

    def __post_init__(self):
        for p in self.params:
            object.__setattr__(self, p, _real(getattr(self, p), p))
        if self.s == self.t:
            raise DomainError("h-beta needs s != t")
        if not self.beta > -min(self.s, self.t):
            raise DomainError(f"beta must exceed -min(s, t) = {-min(self.s, self.t)!r}")

    @property
    def domain(self):
        return (-min(self.s, self.t), math.inf)

    @property
    def removable_points(self):
        return (self.beta,)

    def _ln_limit(self, x):
        return polygamma(0, self.beta + self.s) - polygamma(0, self.beta + self.t)

    def _ln_generic(self, x):
        # the order-0 quotient avoids cancelling ln Gamma values near x = beta
        return self._ln_series(x, 0).coeffs[0]

    def _ln_series(self, x0, K):
        radius = self.beta + min(self.s, self.t)
        return _lg_quotient_series(x0, K, (self.s, self.t), (1.0, -1.0), self.beta, radius)


@dataclass(frozen=True)
class PAlpha(Family):
    """``[Gamma(alpha+1)/alpha^alpha * x^x/Gamma(x+1)]^(1/(alpha-x))``, ``alpha > 0``.

    Equal to ``exp[psi(alpha+1) - 1] / alpha`` at ``x = alpha``.
    """

    alpha: float
    name = "p-alpha"
    params = ("alpha",)

    def __post_init__(self):
        a = _real(self.alpha, "alpha")
        if a <= 0.0:
            raise DomainError(f"alpha must be positive, got {a!r}")
        object.__setattr__(self, "alpha", a)

    @property
    def removable_points(self):
        return (self.alpha,)

    def _ln_limit(self, x):
        return polygamma(0, self.alpha + 1.0) - 1.0 - math.log(self.alpha)

    def _ln_generic(self, x):
        return self._ln_series(x, 0).coeffs[0]

    def _ln_series(self, x0, K):
        # ln p = -[G(x) - G(alpha)] / (x - alpha) with G(x) = x ln x - ln Gamma(x + 1)
        a = self.alpha

        def numerator(x0, K):
            ident = S.PolySeries.identity(x0, K)
            g = ident * S.from_log_linear(x0, K) - S.from_lngamma(x0, 1.0, K)
            return g - (a * math.log(a) - ln_gamma(a + 1.0))

        def derivs(z, K):
            out = -polygamma_orders(z + 1.0, K)
            out[0] += math.log(z) + 1.0
            j = np.arange(2, K + 2)
            out[1:] += (-1.0) ** j * np.array([math.factorial(i - 2) for i in j]) / z ** (j - 1)
            return out

        return -S.quotient_series(x0, K, a, numerator, derivs, a)


@dataclass(frozen=True)
class HAlphaY(Family):
    """``(x+y+1)^(-alpha) [Gamma(x+y+1)/Gamma(y+1)]^(1/x)``, ``y > -1``.

    Equal to ``(y+1)^(-alpha) exp[psi(y+1)]`` at ``x = 0``.
    """

    alpha: float
    y: float
    name = "h-alpha-y"
    params = ("alpha", "y")

    def __post_init__(self):
        object.__setattr__(self, "alpha", _real(self.alpha, "alpha"))
        y = _real(self.y, "y")
        if not y > -1.0:
            raise DomainError(f"y must exceed -1, got {y!r}")
        object.__setattr__(self, "y", y)

    @property
    def domain(self):
        return (-self.y - 1.0, math.inf)

    @property
    def removable_points(self):
        return (0.0,)

    def _ln_limit(self, x):
        return -self.alpha * math.log(self.y + 1.0) + polygamma(0, self.y + 1.0)

    def _ln_generic(self, x):
        return self._ln_series(x, 0).coeffs[0]

    def _ln_series(self, x0, K):
        y = self.y
        power = S.from_log_linear(x0, K, intercept=y + 1.0) * (-self.alpha)
        return power + _lg_quotient_series(x0, K, (y + 1.0,), (1.0,), 0.0, y + 1.0)


@dataclass(frozen=True)
class PsiRatio(Family):
    """``[Gamma(x+t)/Gamma(x+s)]^(1/(t-s))``, and ``exp psi(x+s)`` when ``s == t``."""

    s: float
    t: float
    name = "psi-ratio"
    params = ("s", "t")

    def __post_init__(self):
        object.__setattr__(self, "s", _real(self.s, "s"))
        object.__setattr__(self, "t", _real(self.t, "t"))

    @property
    def domain(self):
        return (-min(self.s, self.t), math.inf)

    def ln_value(self, x):
        x = self._check_x(x)
        if self.s == self.t:
            return polygamma(0, x + self.s)
        return (ln_gamma(x + self.t) - ln_gamma(x + self.s)) / (self.t - self.s)

    def _ln_series(self, x0, K):
        if self.s == self.t:
            return S.from_digamma(x0, self.s, K)
        if abs(self.t - self.s) < REMOVABLE_GAP:
            raise RemovablePointError(f"|t - s| = {abs(self.t - self.s)!r} is below {REMOVABLE_GAP}")
        return (S.from_lngamma(x0, self.t, K) - S.from_lngamma(x0, self.s, K)) / (self.t - self.s)


# ---------------------------------------------------------------------------
# finite Stieltjes transforms


@dataclass(frozen=True)
class MeasureRep:
    """``f(x) = a/x + b + sum_i w_i / (s_i + x)`` with a finite atomic measure.

    ``atoms`` is a sequence of ``(s_i, w_i)`` pairs with positive entries.
    """

    a: float = 0.0
    b: float = 0.0
    atoms: tuple = ()
    name = "stieltjes"

    def __post_init__(self):
        a, b = _real(self.a, "a"), _real(self.b, "b")
        if a < 0.0 or b < 0.0:
            raise DomainError("a and b must be nonnegative")
        atoms = tuple((_real(s, "s"), _real(w, "w")) for s, w in self.atoms)
        for s, w in atoms:
            if s <= 0.0 or w <= 0.0:
                raise DomainError(f"atom ({s}, {w}) must have positive location and weight")
        if not (a > 0.0 or b > 0.0 or atoms):
            raise DomainError("the zero function is not a positive Stieltjes transform")
        mass = math.fsum(w / (1.0 + s) for s, w in atoms)
        assert math.isfinite(mass)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "atoms", atoms)

    domain = (0.0, math.inf)
    removable_points = ()

    def _check_x(self, x):
        x = _real(x, "x")
        if not x > 0.0:
            raise DomainError(f"x must be positive, got {x!r}")
        return x

    def evaluate(self, x):
        x = self._check_x(x)
        return math.fsum([self.a / x, self.b] + [w / (s + x) for s, w in self.atoms])

    def ln_value(self, x):
        return math.log(self.evaluate(x))

    def derivative(self, k, x):
        """Closed form ``f^(k)(x)``."""
        x = self._check_x(x)
        if k == 0:
            return self.evaluate(x)
        inner = math.fsum([self.a / x ** (k + 1)] + [w / (s + x) ** (k + 1) for s, w in self.atoms])
        return (-1.0) ** k * math.factorial(k) * inner

    def series(self, x0, K):
        x0 = self._check_x(x0)
        K = S._check_order(K)
        c = np.empty(K + 1)
        c[0] = self.evaluate(x0)
        for k in range(1, K + 1):
            inner = math.fsum([self.a / x0 ** (k + 1)] + [w / (s + x0) ** (k + 1) for s, w in self.atoms])
            c[k] = (-1.0) ** k * inner
        return S.PolySeries(x0, c)

    def ln_series(self, x0, K):
        return S.ln_series(self.series(x0, K))

    def text(self):
        atoms = ";".join(f"{_fmt(s)}@{_fmt(w)}" for s, w in self.atoms)
        out = f"{self.name}:a={_fmt(self.a)},b={_fmt(self.b)}"
        return out + (f",atoms={atoms}" if atoms else "")


# ---------------------------------------------------------------------------
# functional surface


def evaluate(spec, x):
    """Value of the family ``spec`` at ``x`` (limit value at removable points)."""
    return spec.evaluate(x)


def ln_series_at(spec, x0, K):
    """Series of ``ln f`` about ``x0`` through order ``K``."""
    return spec.ln_series(x0, K)


def stieltjes_evaluate(m, x):
    return m.evaluate(x)


def stieltjes_series_at(m, x0, K):
    return m.series(x0, K)


def stieltjes_ln_series_at(m, x0, K):
    return m.ln_series(x0, K)


# ---------------------------------------------------------------------------
# text form

FAMILIES = {
    cls.name: cls
    for cls in (
        CodingGain,
        GeneralRatio,
        ShiftedRootRatio,
        QiBerg,
        GstRatio,
        GeneralPowerRatio,
        HBeta,
        PAlpha,
        HAlphaY,
        PsiRatio,
        MeasureRep,
    )
}


def parse_number(text):
    """Decimal literal or one of the named constants ``sqrtpi``, ``2sqrtpi``."""
    key = text.strip().lower()
    if key in NAMED_CONSTANTS:
        return NAMED_CONSTANTS[key]
    try:
        value = float(key)
    except ValueError:
        raise ParseError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"not a finite number: {text!r}")
    return value


def _split_family(text):
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name not in FAMILIES:
        raise ParseError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    fields = {}
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key = key.strip().lower()
            if not eq or not key or not value.strip():
                raise ParseError(f"malformed parameter {item!r} in {text!r}")
            if key in fields:
                raise ParseError(f"duplicate parameter {key!r} in {text!r}")
            fields[key] = value.strip()
    return name, fields


def _build(name, fields, text):
    fields = dict(fields)
    cls = FAMILIES[name]

    def take(key, default=None):
        if key in fields:
            return parse_number(fields.pop(key))
        if default is None:
            raise ParseError(f"{name} needs parameter {key!r}")
        return default

    if cls is GeneralPowerRatio:
        a, b = take("a"), take("b")
        kind = fields.pop("base", "gamma").lower()
        if kind == "gamma":
            base = GammaShiftBase(take("shift", 1.0))
        elif kind == "tab":
            raw = fields.pop("coeffs", None)
            if raw is None:
                raise ParseError("base=tab needs coeffs=c0;c1;...")
            base = TabulatedLogBase(tuple(parse_number(c) for c in raw.split(";")))
        else:
            raise ParseError(f"unknown base {kind!r}; expected 'gamma' or 'tab'")
        spec = GeneralPowerRatio(a, b, base)
    elif cls is MeasureRep:
        a, b = take("a", 0.0), take("b", 0.0)
        atoms = []
        raw = fields.pop("atoms", "")
        for item in filter(None, (p.strip() for p in raw.split(";"))):
            loc, at, weight = item.partition("@")
            if not at:
                raise ParseError(f"atom {item!r} must look like s@w")
            atoms.append((parse_number(loc), parse_number(weight)))
        spec = MeasureRep(a, b, tuple(atoms))
    else:
        spec = cls(*(take(p) for p in cls.params))
    if fields:
        raise ParseError(f"unexpected parameters {sorted(fields)} for {name}")
    return spec


def parse_family(text, **overrides):
    """Parse the canonical text form; ``overrides`` replace individual fields.

    >>> parse_family("general-ratio:a=1,b=0.5,c=2sqrtpi").c
    3.5449077018110318
    """
    name, fields = _split_family(text)
    for key, value in overrides.items():
        fields[key.lower()] = value if isinstance(value, str) else repr(float(value))
    try:
        return _build(name, fields, text)
    except (DomainError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"invalid parameters in {text!r}: {exc}") from exc
