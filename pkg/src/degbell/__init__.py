"""Degenerate r-Stirling numbers, degenerate r-Bell polynomials and boson normal ordering."""

from .exactnum import binomial, deg_falling, falling, format_rational, parse_rational
from .powser import PowerSeries, deg_exp, series_derivative, series_exp, series_mul
from .stirbell import (
    BellPolynomial,
    StirlingTable,
    bell_eval,
    bell_poly,
    dobinski,
    egf_check,
    genfun_check,
    integer_point_check,
    ode_residual,
    recurrence_check,
    stirling_oracle,
    stirling_table,
)

__version__ = "0.1.0"
