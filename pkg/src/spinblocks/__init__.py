"""Exact combinatorics and verification for spin blocks of double covers of
symmetric and alternating groups at odd primes."""

from .partitions import BarPartition, Partition, p_bar_core
from .signs import SpinContext, legendre, mu_lambda, n_lambda
from .bijection import f_to_lambda, lambda_to_f, verify_all, verify_block

__version__ = "0.1.0"

__all__ = [
    "BarPartition",
    "Partition",
    "SpinContext",
    "f_to_lambda",
    "lambda_to_f",
    "legendre",
    "mu_lambda",
    "n_lambda",
    "p_bar_core",
    "verify_all",
    "verify_block",
    "__version__",
]
