"""Phase-space observables for the position-dependent-mass oscillator.

Mass profile ``m(x) = exp(-a |x|)`` with auxiliary coordinate ``mu(x)``,
``mu^2(x) = (4/a^2) exp(-a |x|)``. Eigenfunctions are built from generalized
Laguerre polynomials ``L_n^(l+1/2)(mu^2)``. Units with hbar = 1.

All expectation values reduce to double sums over ``0 <= l1, l2 <= n`` of

    gamma_{n,l,l1,l2} = n!/Gamma(n+l+3/2) (-1)^(l1+l2)/(l1! l2!)
                        * C(n+l+1/2, n-l1) C(n+l+1/2, n-l2)

times a gamma value; the ``1/Gamma(n+l+3/2)`` factor is folded into a gamma
ratio so large ``l`` neither overflows nor underflows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .specfun import bessel_k_complex_order, gamma_ratio, laguerre


@dataclass(frozen=True)
class QuantumIndices:
    n: int
    l: float
    a: float = 1.0

    def __post_init__(self):
        _check_nl(self.n, self.l)
        _check_a(self.a)


def _check_nl(n, l):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if not (l > -1.5 and math.isfinite(l)):
        raise DomainError(f"l must be finite and > -3/2, got {l}")


def _check_a(a):
    if a == 0 or not math.isfinite(a):
        raise DomainError(f"a must be finite and nonzero, got {a}")


def _gen_binomial(x: float, k: int) -> float:
    # C(x, k) = x (x-1) ... (x-k+1) / k! for real x
    out = 1.0
    for j in range(k):
        out *= (x - j) / (j + 1)
    return out


def _coefficient_numerator(n, l, l1, l2):
    # gamma_{n,l,l1,l2} * Gamma(n+l+3/2)
    x = n + l + 0.5
    sign = -1.0 if (l1 + l2) % 2 else 1.0
    return (math.factorial(n) * sign / (math.factorial(l1) * math.factorial(l2))
            * _gen_binomial(x, n - l1) * _gen_binomial(x, n - l2))


def gamma_coefficient(n: int, l: float, l1: int, l2: int) -> float:
    """The coefficient ``gamma_{n,l,l1,l2}`` of the expectation-value sums."""
    _check_nl(n, l)
    if not (0 <= l1 <= n and 0 <= l2 <= n):
        raise DomainError(f"need 0 <= l1, l2 <= n, got l1={l1}, l2={l2}, n={n}")
    return _coefficient_numerator(n, l, l1, l2) / math.gamma(n + l + 1.5)


def _weighted_sum(n, l, shift, factor):
    """sum_{l1,l2} gamma_{n,l,l1,l2} factor(l1, l2) Gamma(l + l1 + l2 + shift)."""
    base = n + l + 1.5
    terms = []
    for l1 in range(n + 1):
        for l2 in range(n + 1):
            f = factor(l1, l2)
            if f == 0:
                continue
            ratio = gamma_ratio(l + l1 + l2 + shift, base)
            terms.append(_coefficient_numerator(n, l, l1, l2) * f * ratio)
    return math.fsum(terms)


def expectation_mu(q: int, n: int, l: float) -> float:
    """``<mu^q>`` for ``q`` in {1, 2}."""
    if q not in (1, 2):
        raise DomainError(f"q must be 1 or 2, got {q}")
    _check_nl(n, l)
    return _weighted_sum(n, l, (q + 3) / 2, lambda l1, l2: 1.0)


def expectation_pi(n: int, l: float) -> complex:
    """``<pi>``, purely imaginary: ``-i sum gamma (l1 - l2 - 1/2) Gamma(l+l1+l2+1)``."""
    _check_nl(n, l)
    return complex(0.0, -_weighted_sum(n, l, 1.0, lambda l1, l2: l1 - l2 - 0.5))


def expectation_pi2(n: int, l: float) -> float:
    """``<pi^2> = sum gamma (l + 1/2 - l1^2 - l2^2 + 2 l1 l2 + 2 l1) Gamma(l+l1+l2+1/2)``."""
    _check_nl(n, l)
    return _weighted_sum(
        n, l, 0.5, lambda l1, l2: l + 0.5 - l1 * l1 - l2 * l2 + 2 * l1 * l2 + 2 * l1
    )


def uncertainties(n: int, l: float) -> tuple[float, float]:
    """``(Delta mu, Delta pi)``.

    ``<pi>`` is imaginary, so its square entering ``Delta pi`` is the complex
    square (a negative real) and the radicand becomes ``<pi^2> + |<pi>|^2``.
    A negative radicand raises instead of being clamped.
    """
    mu1 = expectation_mu(1, n, l)
    var_mu = expectation_mu(2, n, l) - mu1 * mu1
    pi1 = expectation_pi(n, l)
    var_pi = expectation_pi2(n, l) - (pi1 * pi1).real
    if var_mu < 0 or var_pi < 0:
        raise DomainError(f"negative variance (mu: {var_mu}, pi: {var_pi}) at n={n}, l={l}")
    return math.sqrt(var_mu), math.sqrt(var_pi)


def uncertainty_product(n: int, l: float) -> float:
    dmu, dpi = uncertainties(n, l)
    return dmu * dpi


def mu_of_x(x: float, a: float) -> float:
    """Auxiliary coordinate: ``-(2/a) e^(-a x/2)`` for ``x > 0``, ``(2/a) e^(a x/2)`` otherwise."""
    _check_a(a)
    if x > 0:
        return -(2.0 / a) * math.exp(-a * x / 2)
    return (2.0 / a) * math.exp(a * x / 2)


def kappa_of_x(x: float, a: float) -> float:
    """``mu^2(x) = (4/a^2) e^(-a|x|)``."""
    _check_a(a)
    return 4.0 / (a * a) * math.exp(-a * abs(x))


def weyl_transform_mu(q: int, x: float, a: float) -> float:
    """Weyl symbol of ``mu^q(x)``, which is ``mu^q`` itself."""
    return mu_of_x(x, a) ** q


def weyl_transform_pi(q: int, x: float, p: float, a: float) -> complex:
    """Weyl symbol of ``pi^q`` where ``pi = p / sqrt(m(x))``.

    q = 1: ``(2/a) p / mu + (i/2) / mu``
    q = 2: ``(4/a^2) p^2 / mu^2 + (2i/a) p / mu^2``
    """
    mu = mu_of_x(x, a)
    if q == 1:
        return complex(2.0 / a * p / mu, 0.5 / mu)
    if q == 2:
        mu2 = mu * mu
        return complex(4.0 / (a * a) * p * p / mu2, 2.0 / a * p / mu2)
    raise DomainError(f"q must be 1 or 2, got {q}")


def wigner_kappa(n: int, l: float, a: float, kappa: float, p: float) -> float:
    """Wigner function expressed through ``kappa = mu^2``.

        (2 n! / (pi Gamma(n+l+3/2))) sum_{l1,l2} (-1)^(l1+l2)/(l1! l2!) C C
            * kappa^(l+l1+l2+3/2) K_{l1-l2-2ip/a}(kappa)

    The (l1, l2) and (l2, l1) terms are complex conjugates; the imaginary
    remainder is checked against 1e-10 of the term scale and dropped.
    """
    _check_nl(n, l)
    _check_a(a)
    if not kappa > 0:
        raise DomainError(f"kappa must be > 0, got {kappa}")
    norm = 2.0 / (math.pi * math.gamma(n + l + 1.5))
    log_k = math.log(kappa)
    re_terms, im_terms = [], []
    scale = 0.0
    for l1 in range(n + 1):
        for l2 in range(n + 1):
            c = _coefficient_numerator(n, l, l1, l2)
            k = bessel_k_complex_order(complex(l1 - l2, -2.0 * p / a), kappa)
            t = c * math.exp((l + l1 + l2 + 1.5) * log_k) * k
            re_terms.append(t.real)
            im_terms.append(t.imag)
            scale += abs(t)
    im = math.fsum(im_terms)
    if abs(im) > 1e-10 * max(scale, 1e-300):
        raise ArithmeticError(f"Wigner sum left an imaginary part {im:g}")
    return norm * math.fsum(re_terms)


def wigner(idx: QuantumIndices, x: float, p: float) -> float:
    """Closed-form Wigner function at the phase-space point ``(x, p)``."""
    return wigner_kappa(idx.n, idx.l, idx.a, kappa_of_x(x, idx.a), p)


def eigenfunction(n: int, l: float, a: float, xi, branch: int = 1):
    """Normalised eigenfunction on one analytic branch of the mass profile.

    ``kappa(xi) = (4/a^2) exp(-a * branch * xi)`` sweeps ``(0, inf)`` once as
    ``xi`` runs over the real line, and

        psi = N m^(1/4) kappa^((l+1)/2) exp(-kappa/2) L_n^(l+1/2)(kappa),
        N^2 = 2 n! / Gamma(n + l + 3/2),

    which has unit norm for any ``a``. Accepts numpy arrays.
    """
    import numpy as np

    _check_nl(n, l)
    _check_a(a)
    xi = np.asarray(xi, dtype=float)
    s = a * branch * xi
    kappa = 4.0 / (a * a) * np.exp(-s)
    log_norm = 0.5 * (math.log(2.0) + math.lgamma(n + 1) - math.lgamma(n + l + 1.5))
    with np.errstate(over="ignore", under="ignore"):
        log_mag = log_norm - s / 4 + 0.5 * (l + 1) * np.log(kappa) - kappa / 2
        return np.exp(log_mag) * laguerre(n, l + 0.5, kappa)
