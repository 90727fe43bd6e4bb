"""Gamma- and zeta-family functions evaluated as integrals along a parabola.

Every transform integrates w**(2z) * f(w**2) over the vertical line
Re(w) = sigma, which squaring maps onto a parabola around the origin.
"""

from ._core import (
    PmtError,
    absolute_moment,
    big_g,
    big_g_closed,
    chi,
    critical_line_value,
    digamma,
    distribution_names,
    entry_names,
    eta,
    euler_gamma,
    gamma,
    gamma_reference,
    hurwitz_zeta,
    jensen_oracle,
    pmt_eval,
    property_names,
    reciprocal_gamma,
    run_cli,
    scan_zeros,
    series_oracle,
    verify_property,
    verify_table,
    zeta,
)

__all__ = [
    "PmtError",
    "absolute_moment",
    "big_g",
    "big_g_closed",
    "chi",
    "critical_line_value",
    "digamma",
    "distribution_names",
    "entry_names",
    "eta",
    "euler_gamma",
    "gamma",
    "gamma_reference",
    "hurwitz_zeta",
    "jensen_oracle",
    "pmt_eval",
    "property_names",
    "reciprocal_gamma",
    "run_cli",
    "scan_zeros",
    "series_oracle",
    "verify_property",
    "verify_table",
    "zeta",
]
