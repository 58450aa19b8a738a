"""Closed-form Fourier transform of ``s^m Gamma(alpha - i s) Gamma(beta + i s)``.

    F_m(alpha, beta; lam) = int_R exp(-i lam s) s^m Gamma(alpha - i s) Gamma(beta + i s) ds

With ``z = e^lam / (1 + e^lam)`` the closed form reads

    F = 2 pi (-i)^m m! Gamma(alpha+beta) z^beta (1-z)^alpha
        * sum_M (-1)^M (beta)_M W_M 2F1(-M, alpha+beta; beta; z)

where ``W_M`` is the Faa di Bruno weight summed over the partitions of ``m``
with ``M`` parts. The sum is real, so the result is ``(-i)^m`` times a real.
"""
from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from decimal import Decimal
from math import factorial

from .errors import DivergenceError, DomainError, GammaOverflowError
from .partitions import MAX_ORDER, weights_by_parts
from .specfun import hyp2f1_terminating, pochhammer

# Gamma(x) overflows a double beyond this argument.
_GAMMA_ARG_MAX = 171.6


@dataclass(frozen=True)
class TransformParams:
    alpha: float
    beta: float
    m: int
    lam: float = 0.0

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise DomainError(f"alpha must be finite and > 0, got {self.alpha}")
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise DomainError(f"beta must be finite and > 0, got {self.beta}")
        _check_m(self.m)
        if not math.isfinite(self.lam):
            raise DomainError(f"lambda must be finite, got {self.lam}")


def _check_m(m, minimum=0):
    if not isinstance(m, int) or isinstance(m, bool) or m < minimum:
        raise DomainError(f"m must be an integer >= {minimum}, got {m!r}")
    if m > MAX_ORDER:
        raise DomainError(f"m = {m} exceeds the partition guard {MAX_ORDER}")


def _check_positive(name, v):
    if not (v > 0 and math.isfinite(v)):
        raise DomainError(f"{name} must be finite and > 0, got {v}")


def _log_z(lam):
    """(log z, log(1 - z)) for z = 1 / (1 + e^-lam), stable for any finite lam."""
    if lam >= 0:
        t = math.log1p(math.exp(-lam))
        return -t, -lam - t
    t = math.log1p(math.exp(lam))
    return lam - t, -t


def _neg_i_pow(m):
    return (1 + 0j, -1j, -1 + 0j, 1j)[m % 4]


def _faa_sum(m, beta, c, z) -> Fraction:
    """Exact ``m! sum_M (-1)^M (beta)_M W_M 2F1(-M, c; beta; z)``.

    Binary floats are exact rationals, so the alternating sum is accumulated
    without rounding and only the final conversion rounds. The float
    evaluation loses up to ~1e-11 to cancellation at m = 6.
    """
    beta, c, z = Fraction(beta), Fraction(c), Fraction(z)
    f = factorial(m)
    total = Fraction(0)
    for M, w in enumerate(weights_by_parts(m)):
        if w == 0:
            continue
        term = w * f * pochhammer(beta, M) * hyp2f1_terminating(M, c, beta, z)
        total += -term if M % 2 else term
    return total


def _log_abs(q: Fraction) -> float:
    return math.log(abs(q.numerator)) - math.log(q.denominator)


def _assemble(m, log_prefactor, value: Fraction) -> complex:
    # 2 pi (-i)^m exp(log_prefactor) value, assembled in log space
    if value == 0:
        return 0j
    log_mag = math.log(2 * math.pi) + log_prefactor + _log_abs(value)
    if log_mag > 709.78:
        raise GammaOverflowError("transform value exceeds double range")
    return complex(_neg_i_pow(m) * math.copysign(math.exp(log_mag), value))


def eval_transform(p: TransformParams) -> complex:
    """Closed-form value of the transform for ``alpha, beta > 0``.

    Raises
    ------
    GammaOverflowError
        If ``Gamma(alpha + beta)`` is not representable.
    """
    a, b, m, lam = p.alpha, p.beta, p.m, p.lam
    c = a + b
    if c > _GAMMA_ARG_MAX:
        raise GammaOverflowError(f"Gamma(alpha + beta) overflows for alpha + beta = {c}")
    log_z, log_1mz = _log_z(lam)
    z = math.exp(log_z)
    log_pref = math.lgamma(c) + b * log_z + a * log_1mz
    return _assemble(m, log_pref, _faa_sum(m, b, c, z))


def eval_transform_case1(p: TransformParams, max_terms: int = 100_000) -> complex:
    """The untransformed form valid for ``lam < 0``:

        2 pi (-i)^m m! Gamma(a+b) e^(b lam) sum_M (-1)^M (b)_M W_M 2F1(b+M, a+b; b; -e^lam)

    The non-terminating 2F1 is summed as a power series (``|e^lam| < 1``). Near
    ``lam = 0`` its terms exceed the sum by many orders of magnitude, so the
    series runs in 40-digit decimal arithmetic. Only used to cross-check
    ``eval_transform``, which is its Pfaff-transformed image.
    """
    a, b, m, lam = p.alpha, p.beta, p.m, p.lam
    if not lam < 0:
        raise DomainError("the series form needs lambda < 0")
    c = a + b
    weights = weights_by_parts(m)
    f = factorial(m)
    with decimal.localcontext() as ctx:
        ctx.prec = 40
        x = -Decimal(math.exp(lam))
        db = Decimal(b)
        total = Decimal(0)
        for M, w in enumerate(weights):
            if w == 0:
                continue
            hyp = _hyp2f1_series(db + M, Decimal(c), db, x, max_terms)
            coef = Decimal((w * f).numerator) / Decimal((w * f).denominator)
            term = coef * _decimal_pochhammer(db, M) * hyp
            total += -term if M % 2 else term
        value = float(total)
    return _neg_i_pow(m) * 2 * math.pi * math.gamma(c) * math.exp(b * lam) * value


def _decimal_pochhammer(a, n):
    out = Decimal(1)
    for k in range(n):
        out *= a + k
    return out


def _hyp2f1_series(A, B, C, x, max_terms):
    term = Decimal(1)
    acc = Decimal(1)
    tiny = Decimal("1e-30")
    for k in range(max_terms):
        term *= (A + k) * (B + k) / ((C + k) * (k + 1)) * x
        acc += term
        if abs(term) < tiny * abs(acc) and k > 10:
            return acc
    raise DomainError("hypergeometric series did not converge")


def eval_m_zero(alpha: float, beta: float, lam: float = 0.0) -> float:
    """Zeroth moment: ``2 pi Gamma(a+b) e^(b lam) / (1 + e^lam)^(a+b)``."""
    _check_positive("alpha", alpha)
    _check_positive("beta", beta)
    log_z, log_1mz = _log_z(lam)
    return 2 * math.pi * math.exp(math.lgamma(alpha + beta) + beta * log_z + alpha * log_1mz)


def eval_equal_params(beta: float, m: int, lam: float = 0.0) -> complex:
    """Transform with ``alpha = beta``, written through the duplication formula:

        sqrt(pi) (-i)^m m! sech(lam/2)^(2 beta) Gamma(beta + 1/2)
            * sum_M (-1)^M Gamma(beta+M) W_M 2F1(-M, 2 beta; beta; z)
    """
    _check_positive("beta", beta)
    _check_m(m)
    if 2 * beta > _GAMMA_ARG_MAX:
        raise GammaOverflowError("Gamma(2 beta) overflows")
    log_z, _ = _log_z(lam)
    z = math.exp(log_z)
    # (2 / (1 + cosh lam))^beta = sech(lam/2)^(2 beta)
    half = abs(lam) / 2
    log_sech = -(half + math.log1p(math.exp(-2 * half)) - math.log(2))
    # Gamma(beta + M) = (beta)_M Gamma(beta); 2 pi is restored by _assemble
    log_pref = (2 * beta * log_sech + math.lgamma(beta + 0.5) + math.lgamma(beta)
                + 0.5 * math.log(math.pi) - math.log(2 * math.pi))
    return _assemble(m, log_pref, _faa_sum(m, beta, 2 * beta, z))


def eval_alpha_zero(beta: float, m: int, lam: float = 0.0) -> complex:
    """Limit ``alpha -> 0+`` of the transform.

    The printed special cases are used where they apply:

    * ``lam = 0, m = 0``: ``pi 2^(1-beta) Gamma(beta)``
    * ``m = 0``: ``2 pi z^beta Gamma(beta)``
    * ``lam = 0``: ``pi (-i)^m m! 2^(1-beta) sum_M (-1/2)^M Gamma(beta+M) W_M``

    and otherwise the general limit
    ``2 pi (-i)^m m! z^beta sum_M (-1)^M Gamma(beta+M) W_M (1-z)^M``.
    """
    _check_positive("beta", beta)
    _check_m(m)
    if lam == 0 and m == 0:
        return complex(math.pi * 2 ** (1 - beta) * math.gamma(beta))
    if m == 0:
        log_z, _ = _log_z(lam)
        return complex(2 * math.pi * math.exp(beta * log_z + math.lgamma(beta)))
    weights = weights_by_parts(m)
    f = factorial(m)
    if lam == 0:
        terms = [(-0.5) ** M * math.gamma(beta + M) * float(w * f) for M, w in enumerate(weights) if w]
        return _neg_i_pow(m) * math.pi * 2 ** (1 - beta) * math.fsum(terms)
    log_z, log_1mz = _log_z(lam)
    one_minus_z = math.exp(log_1mz)
    terms = [(-one_minus_z) ** M * math.gamma(beta + M) * float(w * f) for M, w in enumerate(weights) if w]
    return _neg_i_pow(m) * 2 * math.pi * math.exp(beta * log_z) * math.fsum(terms)


def eval_zero_zero(m: int, lam: float = 0.0) -> complex:
    """Iterated limit ``alpha -> 0+`` then ``beta -> 0+``:

        2 pi (-i)^m m! sum_M (-1)^M Gamma(M) W_M (1 + e^lam)^(-M)

    Only defined for ``m >= 1``; at ``m = 0`` the ``M = 0`` term is ``Gamma(0)``.
    """
    if m == 0:
        raise DivergenceError("the alpha=beta=0 transform diverges at m = 0")
    _check_m(m, minimum=1)
    _, log_1mz = _log_z(lam)
    r = math.exp(log_1mz)  # 1 / (1 + e^lam)
    weights = weights_by_parts(m)
    f = factorial(m)
    terms = [(-r) ** M * math.gamma(M) * float(w * f) for M, w in enumerate(weights) if w]
    return _neg_i_pow(m) * 2 * math.pi * math.fsum(terms)


def derivative_kernel(alpha: float, beta: float, m: int, lam: float = 0.0) -> float:
    """m-th derivative in ``lam`` of ``e^(beta lam) / (1 + e^lam)^(alpha+beta)``.

    Evaluated through the same partition sum as the transform, i.e.
    ``(-1)^m m! h(lam) sum_M (-1)^M (beta)_M W_M 2F1(-M, alpha+beta; beta; z)``.
    """
    _check_positive("alpha", alpha)
    _check_positive("beta", beta)
    _check_m(m)
    log_z, log_1mz = _log_z(lam)
    z = math.exp(log_z)
    value = _faa_sum(m, beta, alpha + beta, z)
    if value == 0:
        return 0.0
    log_h = beta * log_z + alpha * log_1mz
    sign = -1.0 if m % 2 else 1.0
    return sign * math.copysign(math.exp(log_h + _log_abs(value)), value)
