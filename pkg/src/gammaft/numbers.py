"""Exact rational corollaries of the partition-sum formula.

Every function here returns a ``fractions.Fraction`` and performs no floating
point arithmetic. Gamma values enter only through ratios that are rational:
``Gamma(beta + M) / Gamma(beta) = (beta)_M`` and
``Gamma(M + 1/2) / sqrt(pi) = (2M)! / (4^M M!)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError
from .partitions import weights_by_parts
from .specfun import hyp2f1_terminating, pochhammer

_HALF = Fraction(1, 2)


def _check_order(m, minimum=0):
    if not isinstance(m, int) or isinstance(m, bool) or m < minimum:
        raise DomainError(f"m must be an integer >= {minimum}, got {m!r}")


def _rational(beta) -> Fraction:
    if isinstance(beta, float):
        raise DomainError("beta must be an exact rational (int, Fraction or 'num/den' string)")
    try:
        return Fraction(beta)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {beta!r}") from exc


def _signed_sum(m, term):
    # sum_M (-1)^M W_M term(M) over the part counts of m
    total = Fraction(0)
    for M, w in enumerate(weights_by_parts(m)):
        if w:
            t = w * term(M)
            total += -t if M % 2 else t
    return total


def euler_polynomial(m: int, beta) -> Fraction:
    """Euler polynomial ``E_m(beta)`` for rational ``0 < beta < 1``.

        E_m(beta) = (-1)^m m! sum_M (-1)^M (beta)_M W_M 2F1(-M, 1; beta; 1/2)

    Examples
    --------
    >>> euler_polynomial(2, Fraction(1, 2))
    Fraction(-1, 4)
    """
    _check_order(m)
    beta = _rational(beta)
    if not 0 < beta < 1:
        raise DomainError(f"beta must lie in (0, 1), got {beta}")
    s = _signed_sum(m, lambda M: pochhammer(beta, M) * hyp2f1_terminating(M, 1, beta, _HALF))
    return (-1) ** m * factorial(m) * s


def _half_gamma_ratio(M):
    # Gamma(M + 1/2) / sqrt(pi)
    return Fraction(factorial(2 * M), 4 ** M * factorial(M))


def euler_number(m: int) -> Fraction:
    """Euler number ``E_m`` (integer valued; zero for odd ``m``).

        E_m = (-2)^m m! sum_M (-1)^M [Gamma(M+1/2)/sqrt(pi)] W_M 2F1(-M, 1; 1/2; 1/2)
    """
    _check_order(m)
    s = _signed_sum(m, lambda M: _half_gamma_ratio(M) * hyp2f1_terminating(M, 1, _HALF, _HALF))
    return (-2) ** m * factorial(m) * s


def bernoulli_number(m: int, variant: str = "eq48") -> Fraction:
    """Bernoulli numbers from the partition sums, ``m >= 1``.

    ``variant="eq48"`` returns ``B_m`` (with ``B_1 = -1/2``)::

        B_m = (-1)^(m+1) m m! / (2^m - 1) sum_M (-1/2)^M Gamma(M) W_M

    ``variant="eq47"`` returns ``B_(m+1)``::

        B_(m+1) = (-1)^(m+1) (m+1) m! / (2^(m+1) - 1) sum_M (-1/2)^(M+1) Gamma(M+1) W_M
    """
    _check_order(m, minimum=1)
    weights = weights_by_parts(m)
    f = factorial(m)
    sign = -1 if m % 2 == 0 else 1  # (-1)^(m+1)
    if variant == "eq48":
        # M = 0 has zero weight for m >= 1, so Gamma(M) = (M-1)! is finite
        s = sum((Fraction(-1, 2) ** M * factorial(M - 1) * w for M, w in enumerate(weights) if w),
                Fraction(0))
        return sign * m * f * s / (2 ** m - 1)
    if variant == "eq47":
        s = sum((Fraction(-1, 2) ** (M + 1) * factorial(M) * w for M, w in enumerate(weights) if w),
                Fraction(0))
        return sign * (m + 1) * f * s / (2 ** (m + 1) - 1)
    raise DomainError(f"variant must be 'eq47' or 'eq48', got {variant!r}")


def monomial_sum(m: int, beta) -> Fraction:
    """``(-1)^m m! sum_M (-1)^M (beta)_M W_M``, which equals ``beta^m``."""
    _check_order(m)
    beta = _rational(beta)
    return (-1) ** m * factorial(m) * _signed_sum(m, lambda M: pochhammer(beta, M))


def gamma_residue(m: int) -> Fraction:
    """``sum_M (-1)^M M! W_M``, the residue ``(-1)^m / m!`` of Gamma at ``-m``."""
    _check_order(m)
    return _signed_sum(m, factorial)


def laguerre_diagonal(m: int, beta) -> Fraction:
    """``L_m^(-m)(beta)`` as ``sum_M (-1)^M (beta)_M W_M``; equals ``(-1)^m beta^m / m!``."""
    _check_order(m)
    beta = _rational(beta)
    return _signed_sum(m, lambda M: pochhammer(beta, M))
