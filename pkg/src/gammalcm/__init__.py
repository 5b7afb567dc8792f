"""Gamma-function ratios and their logarithmic complete monotonicity.

Submodules
----------
specfun   ln Gamma, polygamma and their quadrature oracles
series    truncated Taylor-series arithmetic
families  the catalog of gamma-ratio families and finite Stieltjes transforms
theorem   the closed-form log-derivative identity and region classifier
checker   grid sign tables, inclusion demo, sweeps
cli       the ``gammalcm`` command
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import (
    CoefficientGrowthWarning,
    ConditioningWarning,
    ConvergenceError,
    DomainError,
    ParseError,
    RemovablePointError,
    SeriesMismatchError,
    UnsupportedOrderError,
)
from .specfun import gamma_quadrature, gamma_ratio, ln_gamma, polygamma, polygamma_quadrature
from .series import PolySeries
from .families import (
    CodingGain,
    GeneralPowerRatio,
    GeneralRatio,
    GstRatio,
    HAlphaY,
    HBeta,
    MeasureRep,
    PAlpha,
    PsiRatio,
    QiBerg,
    ShiftedRootRatio,
    parse_family,
)
from .theorem import Region, classify, find_violation, h_capital, kth_log_derivative
from .checker import GridSpec, cm_sign_table, inclusion_demo, lcm_sign_table

__all__ = [
    "__version__",
    "BACKEND",
    "CoefficientGrowthWarning",
    "ConditioningWarning",
    "ConvergenceError",
    "DomainError",
    "ParseError",
    "RemovablePointError",
    "SeriesMismatchError",
    "UnsupportedOrderError",
    "gamma_quadrature",
    "gamma_ratio",
    "ln_gamma",
    "polygamma",
    "polygamma_quadrature",
    "PolySeries",
    "CodingGain",
    "GeneralPowerRatio",
    "GeneralRatio",
    "GstRatio",
    "HAlphaY",
    "HBeta",
    "MeasureRep",
    "PAlpha",
    "PsiRatio",
    "QiBerg",
    "ShiftedRootRatio",
    "parse_family",
    "Region",
    "classify",
    "find_violation",
    "h_capital",
    "kth_log_derivative",
    "GridSpec",
    "cm_sign_table",
    "inclusion_demo",
    "lcm_sign_table",
]
