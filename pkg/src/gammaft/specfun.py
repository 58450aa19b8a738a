"""Scalar special functions used throughout the package.

``complex_gamma`` and ``laguerre`` accept numpy arrays as well as scalars so
the quadrature oracles can evaluate whole panels at once.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import DomainError, PoleError

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

# B_2k / (2k (2k-1)) for the Stirling series of log-gamma
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)


def _lanczos(z):
    # valid for Re z >= 1/2
    z = z - 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc = acc + c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * np.exp((z + 0.5) * np.log(t) - t) * acc


def _sin_pi(z):
    # sin(pi z) with the real part reduced mod 2 first, exact for the subtraction
    shift = 2.0 * np.round(z.real / 2.0)
    return np.sin(np.pi * (z - shift))


def complex_gamma(z):
    """Gamma function of a complex argument.

    Lanczos approximation on ``Re z >= 1/2`` and the reflection formula
    ``Gamma(z) Gamma(1 - z) = pi / sin(pi z)`` below it. Scalars return a
    Python ``complex``; array input returns a complex ndarray.

    Raises
    ------
    PoleError
        If any argument is a non-positive integer.
    """
    scalar = np.ndim(z) == 0
    if scalar:
        zc = complex(z)
        if zc.imag == 0.0 and zc.real <= 0.0 and zc.real == math.floor(zc.real):
            raise PoleError(f"gamma has a pole at {zc.real:g}")
        if zc.imag == 0.0 and zc.real == math.floor(zc.real) and zc.real <= 171:
            return complex(math.factorial(int(zc.real) - 1))
    arr = np.asarray(z, dtype=complex)
    poles = (arr.imag == 0.0) & (arr.real <= 0.0) & (arr.real == np.floor(arr.real))
    if np.any(poles):
        raise PoleError("gamma has a pole at a non-positive integer")
    left = arr.real < 0.5
    w = np.where(left, 1.0 - arr, arr)
    g = _lanczos(w)
    if np.any(left):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            refl = np.pi / (_sin_pi(arr) * g)
        g = np.where(left, refl, g)
    if scalar:
        return complex(g)
    return g


def _log_gamma_ratio_large(x: float, y: float) -> float:
    # log Gamma(x) - log Gamma(y) for x, y >= 10 via the Stirling series difference
    d = x - y
    out = (y - 0.5) * math.log1p(d / y) + d * math.log(x) - d
    for k, c in enumerate(_STIRLING, start=1):
        e = 2 * k - 1
        out += c * (x ** -e - y ** -e)
    return out


def gamma_ratio(x: float, y: float) -> float:
    """``Gamma(x) / Gamma(y)`` for real arguments, without intermediate overflow.

    Uses a finite product when ``x - y`` is an integer and a difference of
    Stirling series for large arguments, keeping full double precision where
    ``exp(lgamma(x) - lgamma(y))`` would lose digits.
    """
    for v in (x, y):
        if v <= 0 and v == math.floor(v):
            raise PoleError(f"gamma has a pole at {v:g}")
    d = x - y
    if d == math.floor(d) and abs(d) <= 4096:
        k = int(d)
        if k >= 0:
            return float(pochhammer(y, k))
        return 1.0 / float(pochhammer(x, -k))
    if max(abs(x), abs(y)) < 170.0:
        return math.gamma(x) / math.gamma(y)
    if min(x, y) >= 10.0:
        return math.exp(_log_gamma_ratio_large(x, y))
    # shift both arguments above 10 with the recurrence
    n = int(math.ceil(10.0 - min(x, y)))
    return math.exp(_log_gamma_ratio_large(x + n, y + n)) * float(pochhammer(y, n)) / float(pochhammer(x, n))


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1``.

    Always the product form, so negative-integer ``a`` is fine. The result type
    follows ``a`` (exact for ``int``/``Fraction``).
    """
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"pochhammer order must be a non-negative integer, got {n!r}")
    out = 1
    for k in range(int(n)):
        out = out * (a + k)
    return out


def _is_exact(v) -> bool:
    return isinstance(v, Rational) and not isinstance(v, bool)


def hyp2f1_terminating(M: int, b, c, z):
    """Terminating Gauss series ``2F1(-M, b; c; z)``, a degree-``M`` polynomial in ``z``.

    Summed exactly with ``Fraction`` when ``b``, ``c`` and ``z`` are all
    rational, otherwise in floating point with a compensated sum.

    Raises
    ------
    PoleError
        If ``c + k = 0`` for some ``0 <= k < M``.
    """
    if not isinstance(M, (int, np.integer)) or M < 0:
        raise DomainError(f"M must be a non-negative integer, got {M!r}")
    M = int(M)
    for k in range(M):
        if c + k == 0:
            raise PoleError(f"denominator parameter c={c} hits zero before the series terminates")
    exact = _is_exact(b) and _is_exact(c) and _is_exact(z)
    if exact:
        b, c, z = Fraction(b), Fraction(c), Fraction(z)
        total = term = Fraction(1)
        for k in range(M):
            term = term * (k - M) * (b + k) / ((c + k) * (k + 1)) * z
            total += term
        return total
    b, c, z = float(b), float(c), float(z)
    terms = [1.0]
    term = 1.0
    for k in range(M):
        term = term * (k - M) * (b + k) / ((c + k) * (k + 1)) * z
        terms.append(term)
    return math.fsum(terms)


def laguerre(n: int, a, x):
    """Generalized Laguerre polynomial ``L_n^(a)(x)`` by the three-term recurrence.

    Works elementwise on numpy arrays and exactly on ``Fraction`` inputs.
    """
    if n < 0:
        raise DomainError("Laguerre degree must be non-negative")
    prev = x * 0 + 1
    if n == 0:
        return prev
    cur = 1 + a - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
    return cur


_K_MAX_IMAG_ORDER = 80.0
_K_LOG_CUTOFF = math.log(1e-17)


def _k_real_axis(nu: complex, x: float, h: float, t_max: float):
    t = np.arange(0.0, t_max + h, h)
    env = np.exp(-x * (np.cosh(t) - 1.0))
    a, b = nu.real, nu.imag
    re = env * np.cosh(a * t) * np.cos(b * t)
    im = env * np.sinh(a * t) * np.sin(b * t)
    re[0] *= 0.5
    im[0] *= 0.5
    scale = h * math.exp(-x)
    return complex(math.fsum(re) * scale, math.fsum(im) * scale), float(np.sum(np.abs(re))) * scale


def _k_shifted(nu: complex, x: float, h: float, theta: float, u_lo: float, u_hi: float, peak: float):
    u = np.arange(math.floor(u_lo / h), math.ceil(u_hi / h) + 1) * h
    w = u + 1j * theta
    vals = np.exp(-x * np.cosh(w) + nu * w - peak)
    scale = 0.5 * h * math.exp(peak)
    return complex(math.fsum(vals.real), math.fsum(vals.imag)) * scale, float(np.sum(np.abs(vals))) * scale


def _refine(step, h):
    value, mass = step(h)
    for _ in range(12):
        h *= 0.5
        new, mass = step(h)
        if abs(new - value) <= 1e-15 * max(abs(new), mass):
            return new
        value = new
    return value


def bessel_k_complex_order(nu, x: float) -> complex:
    """Modified Bessel function ``K_nu(x)`` for complex order and real ``x > 0``.

    Evaluates ``int_0^inf exp(-x cosh t) cosh(nu t) dt`` with the trapezoidal
    rule, which converges geometrically for this analytic, doubly decaying
    integrand; the step is halved until two successive sums agree. The range is
    cut where ``exp(-x cosh t + |Re nu| t)`` falls below 1e-17 of its peak.

    For ``|Im nu| > 2`` the real-axis integrand oscillates with cancellation of
    order ``exp(pi |Im nu| / 2)``, so the path is moved to ``Im t = theta`` just
    below ``pi/2``, where the integrand magnitude already matches the result.

    Real ``nu`` gives an exactly real result; purely imaginary ``nu`` is real by
    symmetry and its imaginary part is returned as exactly zero.
    """
    nu = complex(nu)
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"K_nu(x) requires finite x > 0, got {x}")
    if abs(nu.imag) > _K_MAX_IMAG_ORDER:
        raise DomainError(f"|Im nu| = {abs(nu.imag):g} exceeds the guard {_K_MAX_IMAG_ORDER:g}")
    a, b = nu.real, nu.imag
    if abs(b) <= 2.0:
        ar = abs(a)
        # log-envelope -x (cosh t - 1) + ar t, maximised at sinh t = ar / x
        t_peak = math.asinh(ar / x)
        peak = -x * (math.cosh(t_peak) - 1.0) + ar * t_peak
        t_max = max(t_peak, 1.0)
        while -x * (math.cosh(t_max) - 1.0) + ar * t_max - peak > _K_LOG_CUTOFF:
            t_max *= 1.25
        h0 = min(0.25, 1.0 / (1.0 + abs(b)), t_max / 16)
        value = _refine(lambda h: _k_real_axis(nu, x, h, t_max), h0)
    else:
        delta = min(0.5, 2.0 / abs(b))
        theta = math.copysign(0.5 * math.pi - delta, b)
        c = x * math.cos(theta)

        def logmag(u):
            return -c * math.cosh(u) + a * u - b * theta

        u_peak = math.asinh(a / c)
        peak = logmag(u_peak)
        u_lo, u_hi = u_peak - 1.0, u_peak + 1.0
        while logmag(u_lo) - peak > _K_LOG_CUTOFF:
            u_lo -= 0.5 + 0.25 * abs(u_lo)
        while logmag(u_hi) - peak > _K_LOG_CUTOFF:
            u_hi += 0.5 + 0.25 * abs(u_hi)
        h0 = min(0.25, delta / 4.0)
        value = _refine(lambda h: _k_shifted(nu, x, h, theta, u_lo, u_hi, peak), h0)
    if a == 0.0:
        value = complex(value.real, 0.0)
    return value
