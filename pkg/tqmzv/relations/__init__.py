"""Verifiers for the relations among t-interpolated q-multiple zeta values"""

from .cyclic_sum import cyclic_sum_sides, verify_cyclic_sum, verify_cyclic_sum_symbolic
from .hoffman import (
    hoffman_display_element,
    hoffman_kernel_element,
    verify_hoffman,
    verify_hoffman_display,
)
from .kawashima import kawashima_sides, verify_kawashima, verify_kawashima_t0
from .kernel import verify_kernel
from .lemmas import verify_lemma, verify_lemma_suite

__all__ = [
    "cyclic_sum_sides",
    "hoffman_display_element",
    "hoffman_kernel_element",
    "kawashima_sides",
    "verify_cyclic_sum",
    "verify_cyclic_sum_symbolic",
    "verify_hoffman",
    "verify_hoffman_display",
    "verify_kawashima",
    "verify_kawashima_t0",
    "verify_kernel",
    "verify_lemma",
    "verify_lemma_suite",
]
