"""Exact tools for linear Mahler functional equations."""

import logging

from .dichotomy import (
    Bounds,
    DichotomyViolation,
    NoRationalAtBounds,
    Rational,
    RationalCertificate,
    classify,
    dfinite_guess,
    rational_reconstruct,
)
from .dsl import format_equation, parse_equation
from .mahler import (
    MahlerEquation,
    convergence_radius_bound,
    expand,
    guess_equation,
    minimize,
    principal_solution,
    solution_space,
    verify,
)
from .regular import (
    SequencePrefix,
    automaton_export,
    build_automaton,
    kernel_elements,
    linear_representation,
    regular_rank,
    thue_morse,
)
from .structure import decompose, gamma_of, product_truncation

logging.getLogger(__name__).addHandler(logging.NullHandler())

__version__ = "0.1.0"

__all__ = [
    "Bounds", "DichotomyViolation", "MahlerEquation", "NoRationalAtBounds", "Rational",
    "RationalCertificate", "SequencePrefix", "automaton_export", "build_automaton", "classify",
    "convergence_radius_bound", "decompose", "dfinite_guess", "expand", "format_equation",
    "gamma_of", "guess_equation", "kernel_elements", "linear_representation", "minimize",
    "parse_equation", "principal_solution", "product_truncation", "rational_reconstruct",
    "regular_rank", "solution_space", "thue_morse", "verify",
]
