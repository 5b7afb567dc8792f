"""Grid-based sign tables for (logarithmic) complete monotonicity.

A sign table samples ``(-1)^k [ln f]^(k)(x)`` (LCM mode) or
``(-1)^k f^(k)(x)`` (CM mode) on a grid for every order up to ``K``.  A
negative entry beyond tolerance falsifies the property; a clean table is
only evidence, never a proof.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import enum
import math

import numpy as np

from ._tables import FACTORIALS
from .errors import DomainError
from .families import CodingGain, GeneralRatio, MeasureRep, TWO_SQRT_PI, parse_family
from .numdiff import richardson_derivative
from .series import MAX_ORDER, derivative
from .theorem import kth_log_derivative

__all__ = [
    "Mode",
    "GridSpec",
    "DEFAULT_GRID",
    "DEFAULT_ORDER",
    "TOLERANCE_FLOOR",
    "ConsistentUpTo",
    "Violation",
    "SignTable",
    "InclusionReport",
    "SweepRow",
    "lcm_sign_table",
    "cm_sign_table",
    "sign_table",
    "inclusion_demo",
    "finite_difference_crosscheck",
    "sweep_values",
    "sweep",
]

TOLERANCE_FLOOR = 1e-10
DEFAULT_ORDER = 10
MAX_SWEEP_SAMPLES = 10_000


class Mode(enum.Enum):
    LCM = "lcm"
    CM = "cm"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        object.__setattr__(self, "x_min", float(self.x_min))
        object.__setattr__(self, "x_max", float(self.x_max))
        if self.spacing not in ("log", "linear"):
            raise ValueError(f"spacing must be 'log' or 'linear', got {self.spacing!r}")
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)) or not self.x_min < self.x_max:
            raise DomainError(f"grid needs finite x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if int(self.points) != self.points or self.points < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.points!r}")
        object.__setattr__(self, "points", int(self.points))
        if self.spacing == "log" and self.x_min <= 0.0:
            raise DomainError("log spacing needs x_min > 0")

    def values(self):
        if self.spacing == "log":
            return np.geomspace(self.x_min, self.x_max, self.points)
        return np.linspace(self.x_min, self.x_max, self.points)

    def as_dict(self):
        return {"x_min": self.x_min, "x_max": self.x_max, "points": self.points, "spacing": self.spacing}


DEFAULT_GRID = GridSpec(0.01, 100.0, 200, "log")


@dataclass(frozen=True)
class ConsistentUpTo:
    """No sign violation up to ``order`` on ``grid`` at relative ``tolerance``."""

    order: int
    grid: GridSpec
    tolerance: float = TOLERANCE_FLOOR
    ok = True

    def __str__(self):
        return f"ConsistentUpTo(K={self.order})"


@dataclass(frozen=True)
class Violation:
    k: int
    x: float
    value: float
    confirmation: str = "series-only"
    ok = False

    def __str__(self):
        return f"Violation(k={self.k}, x={self.x!r}, value={self.value!r})"


@dataclass(frozen=True, eq=False)
class SignTable:
    family: str
    grid: GridSpec
    max_order: int
    mode: Mode
    orders: tuple
    xs: np.ndarray
    entries: np.ndarray
    tolerances: np.ndarray
    verdict: object

    def rows(self):
        """``(k, x, value, flag)`` for every entry, order-major."""
        for r, k in enumerate(self.orders):
            for i, x in enumerate(self.xs):
                v = self.entries[r, i]
                flag = "violation" if v < -self.tolerances[r, i] else "ok"
                yield k, float(x), float(v), flag


def _neighbourhood_tolerance(entries):
    mags = np.abs(entries)
    padded = np.pad(mags, ((0, 0), (1, 1)), mode="edge")
    local = np.maximum(np.maximum(padded[:, :-2], padded[:, 1:-1]), padded[:, 2:])
    return TOLERANCE_FLOOR * np.maximum(1.0, local)


def _closed_form_params(spec):
    if isinstance(spec, GeneralRatio):
        return spec.a, spec.b, spec.c
    if isinstance(spec, CodingGain):
        return 1.0, 0.5, TWO_SQRT_PI
    return None


def _check_order(K):
    if isinstance(K, bool) or int(K) != K or not 1 <= K <= MAX_ORDER:
        raise ValueError(f"K must be an integer in [1, {MAX_ORDER}], got {K!r}")
    return int(K)


def sign_table(spec, grid=DEFAULT_GRID, K=DEFAULT_ORDER, mode=Mode.LCM):
    """Tabulate signed derivatives of ``ln f`` (LCM) or ``f`` (CM) and judge them."""
    K = _check_order(K)
    mode = Mode(mode)
    xs = grid.values()
    orders = tuple(range(1, K + 1)) if mode is Mode.LCM else tuple(range(0, K + 1))
    signs = np.array([(-1.0) ** k for k in orders])
    facts = np.array([FACTORIALS[k] for k in orders])
    entries = np.empty((len(orders), xs.size))
    for i, x in enumerate(xs):
        p = spec.ln_series(float(x), K) if mode is Mode.LCM else spec.series(float(x), K)
        entries[:, i] = signs * facts * p.coeffs[list(orders)]
    tol = _neighbourhood_tolerance(entries)
    verdict = _judge(spec, mode, orders, xs, entries, tol, grid, K)
    return SignTable(spec.text(), grid, K, mode, orders, xs, entries, tol, verdict)


def _judge(spec, mode, orders, xs, entries, tol, grid, K):
    bad = entries < -tol
    params = _closed_form_params(spec) if mode is Mode.LCM else None
    for r, k in enumerate(orders):
        for i in np.flatnonzero(bad[r]):
            x, value = float(xs[i]), float(entries[r, i])
            if params is None:
                return Violation(k, x, value, "series-only")
            closed = kth_log_derivative(*params, k, x)
            if closed < -tol[r, i]:
                return Violation(k, x, value, "double-path")
    return ConsistentUpTo(K, grid, TOLERANCE_FLOOR)


def lcm_sign_table(spec, grid=DEFAULT_GRID, K=DEFAULT_ORDER):
    """Entries ``(-1)^k [ln f]^(k)(x_i)`` for ``k = 1..K``."""
    return sign_table(spec, grid, K, Mode.LCM)


def cm_sign_table(spec, grid=DEFAULT_GRID, K=DEFAULT_ORDER):
    """Entries ``(-1)^k f^(k)(x_i)`` for ``k = 0..K``."""
    return sign_table(spec, grid, K, Mode.CM)


@dataclass(frozen=True)
class InclusionReport:
    measure: MeasureRep
    lcm: SignTable
    cm: SignTable

    @property
    def consistent(self):
        return self.lcm.verdict.ok and self.cm.verdict.ok


def inclusion_demo(m, grid=DEFAULT_GRID, K=8):
    """Run both sign tables on a finite Stieltjes transform."""
    if not isinstance(m, MeasureRep):
        raise TypeError("inclusion_demo needs a MeasureRep")
    return InclusionReport(m, lcm_sign_table(m, grid, K), cm_sign_table(m, grid, K))


def finite_difference_crosscheck(spec, x, k):
    """Compare the series derivative of ``ln f`` with Richardson finite differences.

    Returns ``(series_value, fd_value, rel_err)``.
    """
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= 4:
        raise ValueError(f"k must be in [1, 4], got {k!r}")
    k = int(k)
    x = float(x)
    lo, hi = spec.domain
    margin = min(x - lo, hi - x)
    step = min(0.1 * k, margin / 10.0)
    if not step > 1e-6:
        raise DomainError(f"x = {x!r} is too close to the domain boundary for a finite-difference step")
    series_value = derivative(spec.ln_series(x, k), k)
    fd_value, _ = richardson_derivative(spec.ln_value, x, k, step)
    scale = max(abs(series_value), abs(fd_value))
    rel_err = 0.0 if scale == 0.0 else abs(series_value - fd_value) / scale
    return series_value, fd_value, rel_err


@dataclass(frozen=True)
class SweepRow:
    param: float
    verdict: object = None
    error: str = ""

    @property
    def label(self):
        if self.error:
            return "error"
        return "consistent" if self.verdict.ok else "violation"


def sweep_values(start, stop, step):
    """``start, start + step, ...`` up to ``stop`` inclusive (empty if ``stop < start``)."""
    start, stop, step = float(start), float(stop), float(step)
    if not step > 0.0:
        raise ValueError(f"step must be positive, got {step!r}")
    if stop < start:
        return []
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    if count > MAX_SWEEP_SAMPLES:
        raise ValueError(f"sweep of {count} samples exceeds the limit {MAX_SWEEP_SAMPLES}")
    return [start + i * step for i in range(count)]


def _sweep_one(job):
    template, free, value, grid, K, mode = job
    try:
        spec = parse_family(template, **{free: value})
        return SweepRow(value, sign_table(spec, grid, K, mode).verdict)
    except (ValueError, ArithmeticError) as exc:
        return SweepRow(value, None, f"{type(exc).__name__}: {exc}")


def sweep(template, free, values, grid=DEFAULT_GRID, K=DEFAULT_ORDER, mode=Mode.LCM, workers=1):
    """Verdicts for ``template`` with parameter ``free`` set to each of ``values``.

    Rows come back in the order of ``values`` whatever the worker count;
    per-sample failures are recorded in the row instead of aborting.
    """
    values = [float(v) for v in values]
    if len(values) > MAX_SWEEP_SAMPLES:
        raise ValueError(f"sweep of {len(values)} samples exceeds the limit {MAX_SWEEP_SAMPLES}")
    K = _check_order(K)
    mode = Mode(mode)
    jobs = [(template, free, v, grid, K, mode) for v in values]
    if workers <= 1 or len(jobs) < 2:
        return [_sweep_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_one, jobs))
