"""Closed-form Fourier transforms of gamma-function products, with checks.

Modules
-------
partitions  integer partitions and Faa di Bruno weights
specfun     complex gamma, Pochhammer, terminating 2F1, Laguerre, Bessel K
transform   closed-form transform and its special cases
oracle      quadrature reference evaluators
numbers     exact Euler and Bernoulli numbers and related identities
physics     Wigner function and expectation values for the PDEM oscillator
"""
from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    GammaFTError,
    GammaOverflowError,
    PoleError,
    ResourceLimitError,
)
from .transform import TransformParams, eval_transform

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "GammaFTError",
    "GammaOverflowError",
    "PoleError",
    "ResourceLimitError",
    "TransformParams",
    "eval_transform",
]
