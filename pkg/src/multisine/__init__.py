"""Arbitrary-precision multiple sine functions and related identities."""

from .bd_adamchik import (RegularizedProductValue, adamchik_shifted_product, d_func, d_ratio,
                          e_func, gamma_alpha, kachi_tzermias_catalan, kachi_tzermias_zeta3)
from .errors import BudgetExceededError, ConvergenceError, DomainError, MultisineError
from .kurokawa import c3, holcombe_product, s2_closed_form, s3_derivative_at_1, s_r, weierstrass_p
from .mp_core import (Precision, SeriesSpec, agree_digits, richardson_limit, sum_alternating,
                      sum_series)
from .polylog import barnes_g_ratio, chi2, cl2, li2, li3, log_gamma_half_integer, ti2
from .zeta_constants import constant, eta, zeta, zeta_prime

__version__ = "0.1.0"
