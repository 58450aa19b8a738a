"""Brute-force reference evaluators, used only for verification.

Everything here is computed by direct numerical integration of the defining
integrals, independently of the closed forms in ``transform`` and ``physics``.
The integrator is an adaptive 21-point Gauss-Kronrod rule that evaluates whole
batches of panels in one vectorised call and sums the final panels with
``math.fsum`` in left-to-right order, so results do not depend on how the
refinement was scheduled.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError
from .physics import _check_a, _check_nl, eigenfunction, gamma_coefficient
from .specfun import complex_gamma, laguerre
from .transform import TransformParams, _check_m

# 21-point Kronrod nodes on [0, 1] (the rule is symmetric); odd indices are
# the embedded 10-point Gauss nodes.
_XK = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
])
_WK = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_W_KRONROD = np.concatenate([_WK[:-1], _WK[::-1]])
_W_GAUSS = np.zeros(21)
_W_GAUSS[1:10:2] = _WG
_W_GAUSS[11:20:2] = _WG[::-1]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances for the adaptive integrator.

    ``truncation`` is the half-width ``S`` of the integration interval for the
    transform oracle; ``None`` picks it from the integrand envelope.
    """
    truncation: float | None = None
    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_subdivisions: int = 20_000

    def __post_init__(self):
        if self.truncation is not None and not self.truncation > 0:
            raise DomainError("truncation must be > 0")
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be > 0")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


@dataclass(frozen=True)
class QuadResult:
    value: complex
    error: float
    panels: int


def _gk_batch(f, lo, hi):
    # Apply the rule to many panels at once: returns (kronrod, error, |f| mass)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    y = np.asarray(f(x.ravel()), dtype=complex).reshape(x.shape)
    if not np.all(np.isfinite(y)):
        raise ConvergenceError("integrand is not finite on the integration range")
    k = (y @ _W_KRONROD) * half
    g = (y @ _W_GAUSS) * half
    mass = (np.abs(y) @ _W_KRONROD) * np.abs(half)
    return k, np.abs(k - g), mass


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    edges: Sequence[float],
    rel_tol: float = 1e-12,
    abs_tol: float = 1e-14,
    max_subdivisions: int = 20_000,
) -> QuadResult:
    """Adaptive Gauss-Kronrod integral of a vectorised ``f`` over ``[edges[0], edges[-1]]``.

    ``edges`` are the initial panel boundaries. Each round bisects every panel
    whose error estimate exceeds its share of the tolerance. The requested
    tolerance is floored at the rounding level ``50 eps * int |f|``.

    Raises
    ------
    ConvergenceError
        When the panel count would exceed ``max_subdivisions``.
    """
    e = np.asarray(sorted(set(float(v) for v in edges)))
    if e.size < 2:
        raise DomainError("need at least two distinct edges")
    lo, hi = e[:-1], e[1:]
    val, err, mass = _gk_batch(f, lo, hi)
    while True:
        total = complex(math.fsum(val.real), math.fsum(val.imag))
        tol = max(abs_tol, rel_tol * abs(total), 50 * _EPS * math.fsum(mass))
        total_err = math.fsum(err)
        if total_err <= tol:
            break
        share = tol / lo.size
        bad = err > share
        if not np.any(bad):
            bad = err == err.max()
        if lo.size + int(bad.sum()) > max_subdivisions:
            raise ConvergenceError(
                f"no convergence within {max_subdivisions} panels (error {total_err:.3g}, target {tol:.3g})"
            )
        blo, bhi = lo[bad], hi[bad]
        bmid = 0.5 * (blo + bhi)
        nlo = np.concatenate([blo, bmid])
        nhi = np.concatenate([bmid, bhi])
        nval, nerr, nmass = _gk_batch(f, nlo, nhi)
        keep = ~bad
        lo = np.concatenate([lo[keep], nlo])
        hi = np.concatenate([hi[keep], nhi])
        val = np.concatenate([val[keep], nval])
        err = np.concatenate([err[keep], nerr])
        mass = np.concatenate([mass[keep], nmass])
    order = np.argsort(lo, kind="stable")
    val = val[order]
    value = complex(math.fsum(val.real), math.fsum(val.imag))
    return QuadResult(value, float(total_err), int(lo.size))


# transform oracle

def _truncation(m, c, abs_tol):
    # |Gamma(a - is) Gamma(b + is)| <~ 2 pi |s|^(a+b-1) exp(-pi |s|)
    target = 1e-3 * abs_tol
    s = 40.0
    while math.log(2 * math.pi) + (m + c - 1) * math.log(s) - math.pi * s > math.log(target):
        s += 5.0
    return s


def _panel_edges(lam, S):
    if abs(lam) > 4:
        # zeros of cos(lam s) keep one half-oscillation per panel
        step = math.pi / abs(lam)
        k = int(S / step)
        zeros = (np.arange(-k, k) + 0.5) * step
        inner = zeros[np.abs(zeros) < S]
    else:
        inner = np.array([-20.0, -8.0, -3.0, -1.0, 1.0, 3.0, 8.0, 20.0])
        inner = inner[np.abs(inner) < S]
    return np.concatenate([[-S, 0.0, S], inner])


def _transform_integrand(alpha, beta, m, lam):
    if alpha == 0:
        # s^m Gamma(-is) = i s^(m-1) Gamma(1 - is) removes the removable 0/0
        def f(s):
            g = complex_gamma(1.0 - 1j * s) * complex_gamma(beta + 1j * s)
            return 1j * np.exp(-1j * lam * s) * s ** (m - 1) * g
    else:
        def f(s):
            g = complex_gamma(alpha - 1j * s) * complex_gamma(beta + 1j * s)
            return np.exp(-1j * lam * s) * s ** m * g
    return f


def _quad_raw(alpha, beta, m, lam, q: QuadratureSpec) -> QuadResult:
    S = q.truncation if q.truncation is not None else _truncation(m, alpha + beta, q.abs_tol)
    f = _transform_integrand(alpha, beta, m, lam)
    return integrate(f, _panel_edges(lam, S), q.rel_tol, q.abs_tol, q.max_subdivisions)


def quad_transform(p: TransformParams, q: QuadratureSpec | None = None) -> QuadResult:
    """Direct quadrature of ``int exp(-i lam s) s^m Gamma(alpha-is) Gamma(beta+is) ds``.

    Examples
    --------
    >>> r = quad_transform(TransformParams(1.0, 1.0, 0, 0.0))
    >>> round(r.value.real, 12)
    1.570796326795
    """
    return _quad_raw(p.alpha, p.beta, p.m, p.lam, q or QuadratureSpec())


def _extrapolate(xs, results):
    # Neville's scheme evaluated at x = 0; the error is the last correction
    # plus the quadrature errors.
    xs = list(xs)
    ys = [r.value for r in results]
    n = len(xs)
    table = list(ys)
    last = 0j
    for k in range(1, n):
        for i in range(n - k):
            new = (xs[i + k] * table[i] - xs[i] * table[i + 1]) / (xs[i + k] - xs[i])
            if i == n - k - 1:
                last = new - table[i + 1]
            table[i] = new
    err = abs(last) + sum(r.error for r in results)
    return QuadResult(table[0], err, sum(r.panels for r in results))


def _check_ladder(eps_ladder):
    eps = [float(e) for e in eps_ladder]
    if len(eps) < 2 or any(e <= 0 for e in eps) or any(b >= a for a, b in zip(eps, eps[1:])):
        raise DomainError("eps_ladder must be a decreasing sequence of at least two positive values")
    return eps


def quad_transform_limit(
    m: int,
    lam: float,
    eps_ladder: Sequence[float] = (1e-2, 1e-3, 1e-4),
    q: QuadratureSpec | None = None,
) -> QuadResult:
    """``alpha -> 0+`` then ``beta -> 0+`` limit of the transform by quadrature.

    ``alpha = 0`` is taken exactly (the ``s^m Gamma(-is)`` factor is regular
    for ``m >= 1``); ``beta`` runs down ``eps_ladder`` and the values are
    extrapolated polynomially to ``beta = 0``. Setting ``alpha = beta = eps``
    instead would converge to the principal value, which misses the
    ``i pi delta(s)`` part at odd ``m``.
    """
    _check_m(m, minimum=1)
    eps = _check_ladder(eps_ladder)
    q = q or QuadratureSpec(rel_tol=1e-11, abs_tol=1e-13)
    results = [_quad_raw(0.0, e, m, lam, q) for e in eps]
    return _extrapolate(eps, results)


def quad_transform_alpha_limit(
    beta: float,
    m: int,
    lam: float,
    eps_ladder: Sequence[float] = (1e-2, 1e-3, 1e-4),
    q: QuadratureSpec | None = None,
) -> QuadResult:
    """``alpha -> 0+`` limit at fixed ``beta > 0`` by quadrature at ``alpha = eps`` plus extrapolation."""
    eps = _check_ladder(eps_ladder)
    q = q or QuadratureSpec(rel_tol=1e-11, abs_tol=1e-13)
    results = [quad_transform(TransformParams(e, beta, m, lam), q) for e in eps]
    return _extrapolate(eps, results)


# Wigner oracle

def _support(n, l, a, branch):
    # xi-interval outside which |psi| < 1e-16 of its peak
    xi = np.linspace(-200.0, 200.0, 400_001) / abs(a)
    with np.errstate(all="ignore"):
        psi = np.abs(eigenfunction(n, l, a, xi, branch))
    psi = np.nan_to_num(psi)
    keep = np.nonzero(psi > 1e-16 * psi.max())[0]
    step = xi[1] - xi[0]
    return xi[keep[0]] - step, xi[keep[-1]] + step


def quad_wigner_result(n: int, l: float, a: float, x: float, p: float, rel_tol: float = 1e-12) -> QuadResult:
    """``(1/2pi) int exp(-ipy) psi(x - y/2) psi(x + y/2) dy`` as a complex result.

    ``psi`` is the eigenfunction on the analytic branch of the mass profile
    that contains ``x`` (``branch = sign x``), so ``mu^2 = (4/a^2) exp(-a|x|)``
    at the evaluation point.
    """
    _check_nl(n, l)
    _check_a(a)
    branch = 1 if x >= 0 else -1
    lo, hi = _support(n, l, a, branch)
    half = min(hi - x, x - lo)
    if half <= 0:
        return QuadResult(0j, 0.0, 0)
    Y = 2 * half

    def f(y):
        with np.errstate(all="ignore"):
            prod = eigenfunction(n, l, a, x - y / 2, branch) * eigenfunction(n, l, a, x + y / 2, branch)
        return np.exp(-1j * p * y) * np.nan_to_num(prod) / (2 * math.pi)

    width = 1.0 / abs(a)
    k = int(Y / width)
    edges = np.concatenate([[-Y, Y], np.arange(-k, k + 1) * width])
    edges = edges[np.abs(edges) <= Y]
    return integrate(f, edges, rel_tol, 1e-16)


def quad_wigner(n: int, l: float, a: float, x: float, p: float) -> float:
    """Real Wigner value from the defining integral.

    Raises
    ------
    ConvergenceError
        If the imaginary part does not vanish to 1e-10.
    """
    r = quad_wigner_result(n, l, a, x, p)
    if abs(r.value.imag) > 1e-10:
        raise ConvergenceError(f"Wigner quadrature left an imaginary part {r.value.imag:g}")
    return r.value.real


# expectation-value oracles

def quad_expectation_kappa(n: int, l: float, q: int) -> float:
    """``n!/Gamma(n+l+3/2) int_0^inf kappa^(l+(q+1)/2) e^-kappa [L_n^(l+1/2)(kappa)]^2 dkappa``."""
    _check_nl(n, l)
    if q not in (1, 2):
        raise DomainError(f"q must be 1 or 2, got {q}")
    power = l + (q + 1) / 2

    def f(k):
        with np.errstate(divide="ignore"):
            logk = np.log(k)
        return np.exp(power * logk - k) * laguerre(n, l + 0.5, k) ** 2

    top = 50.0
    while top ** (power + 2 * n) * math.exp(-top) > 1e-30:
        top += 10.0
    edges = [0.0, 0.5, 2.0, 5.0, 10.0, 20.0, 40.0, top]
    r = integrate(f, [e for e in edges if e <= top], 1e-13, 1e-300)
    log_norm = math.lgamma(n + 1) - math.lgamma(n + l + 1.5)
    return r.value.real * math.exp(log_norm)


def quad_expectation_s(n: int, l: float, which: str, q: QuadratureSpec | None = None) -> complex:
    """Expectation value from the s-space double sums, each inner integral by quadrature.

    With ``c = (2/pi) gamma_{n,l,l1,l2}`` and ``j = l + l1 + l2``, each
    ``(l1, l2)`` term is

    * ``mu1``/``mu2``: ``2^((qq-1)/2) c 2^j F_0(sigma1, sigma2)``,
      ``sigma = l/2 + l_i + (qq+3)/4``
    * ``pi``: ``c (2^j F_1(v1, v2) + i 2^(j-2) F_0(v1, v2))``, ``v = l/2 + l_i + 1/2``
    * ``pi2``: ``c (2^(j+1/2) F_2(z1, z2) + i 2^(j-1/2) F_1(z1, z2))``, ``z = l/2 + l_i + 1/4``

    where ``F_m(a, b)`` is the transform at ``lam = 0`` computed by ``quad_transform``.
    """
    _check_nl(n, l)
    if which not in ("mu1", "mu2", "pi", "pi2"):
        raise DomainError(f"unknown observable {which!r}")
    q = q or QuadratureSpec(rel_tol=1e-12, abs_tol=1e-15)

    def F(m, a, b):
        return quad_transform(TransformParams(a, b, m, 0.0), q).value

    re, im = [], []
    for l1 in range(n + 1):
        for l2 in range(n + 1):
            c = 2 / math.pi * gamma_coefficient(n, l, l1, l2)
            j = l + l1 + l2
            if which in ("mu1", "mu2"):
                qq = 1 if which == "mu1" else 2
                s1, s2 = l / 2 + l1 + (qq + 3) / 4, l / 2 + l2 + (qq + 3) / 4
                t = 2 ** ((qq - 1) / 2) * c * 2 ** j * F(0, s1, s2)
            elif which == "pi":
                v1, v2 = l / 2 + l1 + 0.5, l / 2 + l2 + 0.5
                t = c * (2 ** j * F(1, v1, v2) + 1j * 2 ** (j - 2) * F(0, v1, v2))
            else:
                z1, z2 = l / 2 + l1 + 0.25, l / 2 + l2 + 0.25
                t = c * (2 ** (j + 0.5) * F(2, z1, z2) + 1j * 2 ** (j - 0.5) * F(1, z1, z2))
            re.append(t.real)
            im.append(t.imag)
    return complex(math.fsum(re), math.fsum(im))


def phase_space_expectation(observable: str, n: int, l: float, a: float = 1.0,
                            nodes: int = 12) -> complex:
    """Expectation value as a phase-space integral of Wigner function times Weyl symbol.

    Slow: evaluates the closed-form Wigner function on a tensor Gauss-Legendre
    grid in ``(log kappa, p)``. The auxiliary coordinate is taken as
    ``mu = +sqrt(kappa)`` on the branch, matching the ``kappa in (0, inf)``
    integration behind the closed-form expectation values.
    """
    from .physics import wigner_kappa

    _check_nl(n, l)
    _check_a(a)
    if observable not in ("mu", "mu2", "pi", "pi2"):
        raise DomainError(f"unknown observable {observable!r}")
    gx, gw = np.polynomial.legendre.leggauss(nodes)

    def composite(edges):
        pts, wts = [], []
        for lo, hi in zip(edges[:-1], edges[1:]):
            h = 0.5 * (hi - lo)
            pts.append(0.5 * (hi + lo) + h * gx)
            wts.append(h * gw)
        return np.concatenate(pts), np.concatenate(wts)

    top = 50.0 + 4 * n + 2 * l
    u_edges = np.linspace(math.log(1e-12), math.log(top), 9)
    p_edges = np.linspace(0.0, 9.0 * abs(a), 4)
    us, uw = composite(u_edges)
    ps, pw = composite(p_edges)

    def symbol(kappa, mu, p):
        if observable == "mu":
            return complex(mu)
        if observable == "mu2":
            return complex(kappa)
        if observable == "pi":
            return complex(2 / a * p / mu, 0.5 / mu)
        return complex(4 / (a * a) * p * p / kappa, 2 / a * p / kappa)

    re, im = [], []
    for u, wu in zip(us, uw):
        kappa = math.exp(u)
        mu = math.sqrt(kappa)
        for p, wp in zip(ps, pw):
            # W is even in p, so the p < 0 half is folded onto p > 0
            w = wigner_kappa(n, l, a, kappa, p)
            sym = symbol(kappa, mu, p) + symbol(kappa, mu, -p)
            # dx = dkappa / (|a| kappa) = du / |a|
            t = w * sym * wu * wp / abs(a)
            re.append(t.real)
            im.append(t.imag)
    return complex(math.fsum(re), math.fsum(im))
