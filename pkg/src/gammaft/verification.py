"""Acceptance checks shared by ``gammaft verify`` and the test suite.

Each check returns a :class:`CheckResult`. Numeric checks report the worst
observed error next to the tolerance they were held to; exact checks report
``worst = 0`` or the first mismatch in ``detail``.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import numbers, oracle, partitions, physics, transform
from .transform import TransformParams


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tol: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<44} worst={self.worst:.3e} tol={self.tol:.1e} {self.detail}".rstrip()


def _numeric(name, errors, tol, detail=""):
    worst = max(errors) if errors else 0.0
    return CheckResult(name, bool(worst <= tol), worst, tol, detail)


def _exact(name, mismatches):
    detail = f"first mismatch: {mismatches[0]}" if mismatches else ""
    return CheckResult(name, not mismatches, float(len(mismatches)), 0.0, detail)


# independent reference values

def bernoulli_reference(n_max: int) -> list[Fraction]:
    """B_0..B_n from ``sum_{k<=m} C(m+1, k) B_k = 0`` (B_1 = -1/2)."""
    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


def euler_number_reference(n_max: int) -> list[int]:
    """E_0..E_n from ``E_n = -sum_{k<n, k even} C(n, k) E_k`` for even n."""
    e = [1]
    for n in range(1, n_max + 1):
        e.append(0 if n % 2 else -sum(comb(n, k) * e[k] for k in range(0, n, 2)))
    return e


def euler_polynomial_reference(m: int, x: Fraction) -> Fraction:
    """E_m(x) from ``E_n(x) = x^n - (1/2) sum_{k<n} C(n, k) E_k(x)``."""
    vals: list[Fraction] = []
    for n in range(m + 1):
        vals.append(x ** n - Fraction(1, 2) * sum(comb(n, k) * vals[k] for k in range(n)))
    return vals[m]


def bell_reference(n_max: int) -> list[int]:
    """Bell numbers via the Bell triangle."""
    row = [1]
    out = [1]
    for _ in range(n_max):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        out.append(row[0])
    return out


# reference partition listing for m = 1..5: (i_1, ..., i_m) column sets
PARTITION_LISTING = {
    1: {(1,)},
    2: {(0, 1), (2, 0)},
    3: {(0, 0, 1), (1, 1, 0), (3, 0, 0)},
    4: {(0, 0, 0, 1), (1, 0, 1, 0), (0, 2, 0, 0), (2, 1, 0, 0), (4, 0, 0, 0)},
    5: {(0, 0, 0, 0, 1), (1, 0, 0, 1, 0), (0, 1, 1, 0, 0), (2, 0, 1, 0, 0),
        (1, 2, 0, 0, 0), (3, 1, 0, 0, 0), (5, 0, 0, 0, 0)},
}


# criteria

GRID_AB = (0.3, 0.5, 1.0, 1.7, 2.5)
GRID_LAMBDA = (-2.0, -0.5, 0.0, 0.7, 2.0)


def check_grid(tol_floor: float = 0.0) -> CheckResult:
    rel, absolute = max(1e-8, tol_floor), max(1e-10, tol_floor)
    q = oracle.QuadratureSpec(rel_tol=1e-11, abs_tol=1e-13)
    worst, fails = 0.0, []
    for a, b, m, lam in itertools.product(GRID_AB, GRID_AB, range(7), GRID_LAMBDA):
        p = TransformParams(a, b, m, lam)
        f = transform.eval_transform(p)
        g = oracle.quad_transform(p, q).value
        if abs(f) < 1e-6:
            e = abs(f - g) / absolute
        else:
            e = abs(f - g) / abs(f) / rel
        worst = max(worst, e)
        if e > 1:
            fails.append((a, b, m, lam))
    detail = f"{len(fails)} failing cases" if fails else "875 cases"
    return CheckResult("closed form vs quadrature grid", not fails, worst * rel, rel, detail)


def check_anchors(tol_floor: float = 0.0) -> CheckResult:
    pi = math.pi
    values = [
        (transform.eval_zero_zero(2, 0.0), pi / 2),
        (transform.eval_transform(TransformParams(0.5, 0.5, 4, 0.0)), 5 * pi / 16),
        (transform.eval_transform(TransformParams(1.0, 1.0, 0, 0.0)), pi / 2),
        (transform.eval_alpha_zero(1.0, 0, 0.0), pi),
    ]
    for b in (0.5, 1.0, 2.0):
        values.append((transform.eval_equal_params(b, 0, 0.0), pi * 2 ** (1 - 2 * b) * math.gamma(2 * b)))
    errors = [abs(v - ref) / abs(ref) for v, ref in values]
    return _numeric("anchor values", errors, max(1e-12, tol_floor))


def check_number_theory() -> list[CheckResult]:
    out = []
    b = bernoulli_reference(21)
    bad = [m for m in range(1, 21) if numbers.bernoulli_number(m, "eq48") != b[m]]
    bad += [("eq47", m) for m in range(1, 20) if numbers.bernoulli_number(m, "eq47") != b[m + 1]]
    out.append(_exact("Bernoulli numbers (m <= 20)", bad))
    e = euler_number_reference(16)
    out.append(_exact("Euler numbers (m <= 16)", [m for m in range(17) if numbers.euler_number(m) != e[m]]))
    bad = [(m, x) for x in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)) for m in range(9)
           if numbers.euler_polynomial(m, x) != euler_polynomial_reference(m, x)]
    out.append(_exact("Euler polynomials (m <= 8)", bad))
    bad = []
    for m in range(11):
        for beta in (Fraction(1, 7), Fraction(2), Fraction(5, 3), Fraction(-1, 2)):
            if numbers.monomial_sum(m, beta) != beta ** m:
                bad.append(("monomial", m, beta))
            if numbers.laguerre_diagonal(m, beta) != (-1) ** m * beta ** m / factorial(m):
                bad.append(("laguerre", m, beta))
        if numbers.gamma_residue(m) != Fraction((-1) ** m, factorial(m)):
            bad.append(("residue", m))
    out.append(_exact("monomial, residue, Laguerre identities", bad))
    return out


def check_partitions() -> list[CheckResult]:
    out = []
    bad = [(m, c) for m, c in ((6, 11), (7, 15), (8, 22)) if partitions.partition_count(m) != c]
    out.append(_exact("partition counts 11/15/22", bad))
    bad = []
    for m, cols in PARTITION_LISTING.items():
        got = {p.multiplicities for p in partitions.enumerate_partitions(m)}
        if got != cols:
            bad.append(m)
    out.append(_exact("partition listing (m <= 5)", bad))
    bell = bell_reference(7)
    bad = [m for m in range(8)
           if sum(factorial(m) * partitions.faa_weight(p) for p in partitions.enumerate_partitions(m)) != bell[m]]
    out.append(_exact("Bell-number weight identity (m <= 7)", bad))
    return out


def check_physics(tol_floor: float = 0.0) -> list[CheckResult]:
    out = []
    errs = []
    for l in (0, 1, 5, 10):
        errs.append(abs(physics.expectation_pi2(0, l) - 1.0))
        errs.append(abs(physics.expectation_mu(2, 0, l) - (l + 1.5)))
    out.append(_numeric("n=0 closed forms <pi^2>=1, <mu^2>=l+3/2", errs, max(1e-10, tol_floor)))
    errs = []
    for n in range(4):
        for l in (0, 1, 2):
            for q in (1, 2):
                ref = oracle.quad_expectation_kappa(n, l, q)
                errs.append(abs(physics.expectation_mu(q, n, l) - ref) / abs(ref))
    out.append(_numeric("<mu^q> vs kappa-space oracle (n <= 3)", errs, max(1e-6, tol_floor)))
    errs = []
    for n in range(3):
        for l in (0, 1):
            ref = oracle.quad_expectation_s(n, l, "pi")
            errs.append(abs(physics.expectation_pi(n, l) - ref) / abs(ref))
            ref = oracle.quad_expectation_s(n, l, "pi2")
            errs.append(abs(physics.expectation_pi2(n, l) - ref) / abs(ref))
    out.append(_numeric("<pi>, <pi^2> vs s-space oracle (n <= 2)", errs, max(1e-6, tol_floor)))
    return out


def check_uncertainty() -> list[CheckResult]:
    out = []
    vals = [physics.uncertainty_product(0, l) for l in range(21)]
    bad = [(l, v) for l, v in enumerate(vals) if not 0.5 < v < 0.75]
    out.append(_exact("1/2 < product < 3/4 (n=0, l <= 20)", bad))
    errs = [abs(physics.uncertainty_product(n, 1000) - (n + 0.5)) / (n + 0.5) for n in range(3)]
    out.append(_numeric("product ~ n + 1/2 at l = 1000", errs, 0.02))
    seq = [physics.uncertainty_product(0, l) for l in (1, 10, 100, 1000)]
    bad = [i for i in range(3) if not seq[i + 1] < seq[i]]
    out.append(_exact("strictly decreasing in l (n = 0)", bad))
    return out


WIGNER_POINTS = ((0.5, 0.0), (0.3, 0.7), (-1.2, 0.4), (2.0, -1.5), (0.0, 2.5))
WIGNER_INDICES = ((0, 0), (1, 0), (1, 1), (2, 1))


def check_wigner(tol_floor: float = 0.0) -> CheckResult:
    errs = []
    for n, l in WIGNER_INDICES:
        for x, p in WIGNER_POINTS:
            ref = oracle.quad_wigner(n, l, 1.0, x, p)
            w = physics.wigner(physics.QuantumIndices(n, l, 1.0), x, p)
            errs.append(abs(w - ref) / abs(ref))
    return _numeric("Wigner closed form vs quadrature", errs, max(1e-6, tol_floor), "20 points")


def check_phase_space(tol_floor: float = 0.0) -> CheckResult:
    v = oracle.phase_space_expectation("pi2", 0, 0, 1.0)
    return _numeric("phase-space <pi^2>_{0,0} = 1", [abs(v - 1.0)], max(1e-3, tol_floor))


def _random_params(count, seed):
    import random

    rng = random.Random(seed)
    for _ in range(count):
        yield TransformParams(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0), rng.randint(0, 6), rng.uniform(-3, 3))


@functools.lru_cache(maxsize=None)
def _properties(tol_floor: float) -> tuple[CheckResult, ...]:
    return tuple(_check_properties(tol_floor))


def check_properties(tol_floor: float = 0.0) -> list[CheckResult]:
    return list(_properties(tol_floor))


def _check_properties(tol_floor: float = 0.0) -> list[CheckResult]:
    ev = transform.eval_transform
    out = []
    errs = []
    for p in _random_params(100, 1):
        v = ev(p) * 1j ** p.m
        errs.append(abs(v.imag) / abs(v) if v else 0.0)
    out.append(_numeric("reality structure", errs, max(1e-12, tol_floor)))
    errs = []
    for p in _random_params(100, 2):
        f = ev(p)
        g = (-1) ** p.m * ev(TransformParams(p.beta, p.alpha, p.m, -p.lam))
        errs.append(abs(f - g) / max(abs(f), 1e-300))
    out.append(_numeric("swap reflection", errs, max(1e-10, tol_floor)))
    errs = []
    for p in _random_params(60, 3):
        a, b, m, lam = p.alpha, p.beta, p.m, p.lam
        f = ev(p)
        f1 = ev(TransformParams(a, b, m + 1, lam))
        lhs = ev(TransformParams(a + 1, b, m, lam))
        rhs = a * f - 1j * f1
        errs.append(abs(lhs - rhs) / max(abs(lhs), abs(a * f), abs(f1)))
        lhs = ev(TransformParams(a, b + 1, m, lam))
        rhs = b * f + 1j * f1
        errs.append(abs(lhs - rhs) / max(abs(lhs), abs(b * f), abs(f1)))
    out.append(_numeric("contiguous recurrences", errs, max(1e-9, tol_floor)))
    errs = []
    h = 1e-5
    for p in _random_params(30, 4):
        a, b, lam = p.alpha, p.beta, p.lam
        fd = (ev(TransformParams(a, b, 0, lam + h)) - ev(TransformParams(a, b, 0, lam - h))) / (2 * h)
        f1 = ev(TransformParams(a, b, 1, lam))
        errs.append(abs(fd - (-1j) * f1) / abs(f1))
    out.append(_numeric("derivative identity", errs, max(1e-6, tol_floor)))
    errs, bad = [], []
    for a in (0.3, 1.0, 3.0):
        for b in (0.3, 1.0, 3.0):
            f0 = abs(ev(TransformParams(a, b, 0, 0.0)))
            for lam in (-20.0, 20.0):
                ratio = abs(ev(TransformParams(a, b, 0, lam))) / f0
                errs.append(ratio)
                if ratio >= 1e-6:
                    bad.append((a, b, lam))
    # the ratio is 2^(a+b) exp(-20 min(a, b)) to leading order, so small
    # alpha or beta cannot reach 1e-6
    detail = f"{len(bad)}/18 cells fail, e.g. (alpha, beta, lambda) = {bad[0]}" if bad else ""
    out.append(_numeric("decay at |lambda| = 20", errs, max(1e-6, tol_floor), detail))
    errs = [abs(ev(TransformParams(b, b, m, 0.0))) for b in (0.3, 0.5, 1.0, 1.7, 2.5) for m in (1, 3, 5, 7)]
    out.append(_numeric("odd-m vanishing", errs, max(1e-12, tol_floor)))
    errs = []
    for p in _random_params(60, 5):
        lam = -abs(p.lam) - 0.1
        q = TransformParams(p.alpha, p.beta, p.m, lam)
        f = ev(q)
        g = transform.eval_transform_case1(q)
        errs.append(abs(f - g) / abs(f))
    out.append(_numeric("Pfaff case agreement", errs, max(1e-10, tol_floor)))
    return out


def fast_suite(tol_floor: float = 0.0) -> list[Callable[[], list[CheckResult]]]:
    def as_list(fn):
        def run():
            r = fn()
            return r if isinstance(r, list) else [r]
        return run

    return [
        as_list(lambda: check_grid(tol_floor)),
        as_list(lambda: check_anchors(tol_floor)),
        as_list(check_number_theory),
        as_list(check_partitions),
        as_list(lambda: check_physics(tol_floor)),
        as_list(check_uncertainty),
        as_list(lambda: check_wigner(tol_floor)),
        as_list(lambda: check_properties(tol_floor)),
    ]


def run_suite(suite: str = "fast", tol_floor: float = 0.0) -> list[CheckResult]:
    results = []
    for fn in fast_suite(tol_floor):
        results.extend(fn())
    if suite == "slow":
        results.append(check_phase_space(tol_floor))
    return results
