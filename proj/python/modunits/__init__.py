"""Exact-arithmetic toolkit for strong modular units Delta_N, dimension
formulas and unitary upper triangular bases of M_2k(Gamma_0(N)).

Thin wrappers over the C++ core; exact rationals cross the boundary as
"a/b" strings and are converted to fractions.Fraction here.
"""

from fractions import Fraction

from modunits._core import (  # noqa: F401
    RankDeficientError,
    delta_unit,
    dim_e,
    dim_m,
    dim_recurrence_check,
    dim_s,
    divisors,
    eta_text,
    eta_weight,
    euler_phi,
    factorize,
    is_prime,
    is_strong_unit,
    is_weakly_modular,
    kronecker_minus3,
    kronecker_minus4,
    policy_prec,
    profile,
    rho,
    nu,
    search_eta_units,
    set_precision_slack,
    sigma,
)
from modunits import _core


def bernoulli(n):
    """n-th Bernoulli number (even n >= 2) as a Fraction."""
    return Fraction(_core.bernoulli(n))


def eta_valuation(level, exponents):
    return Fraction(_core.eta_valuation(level, exponents))


def cusp_order(level, exponents, c):
    return Fraction(_core.cusp_order(level, exponents, c))


def eta_expand(level, exponents, prec):
    """q-expansion coefficients of an eta quotient as Fractions."""
    return [Fraction(c) for c in _core.eta_expand(level, exponents, prec)]


def eisenstein_series(k2, prec):
    return [Fraction(c) for c in _core.eisenstein_series(k2, prec)]


def h2n(N, prec):
    return [Fraction(c) for c in _core.h2n(N, prec)]


def weight4_val1(N, prec):
    return [Fraction(c) for c in _core.weight4_val1(N, prec)]


def structured_basis(N, k, prec=0):
    """Basis dict with coefficients converted to Fractions."""
    basis = _core.structured_basis(N, k, prec)
    for element in basis["elements"]:
        element["coefficients"] = [Fraction(c) for c in element["coefficients"]]
    return basis
