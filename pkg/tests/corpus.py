"""Shared test corpora with fixed seeds."""

from __future__ import annotations

import random

from mahlerkit.mahler import MahlerEquation

THUE_MORSE = "F(z) - (1-z)*F(z^2) = 0"
GEOMETRIC = "(1-z^2)*F(z^2) - (1-z)*F(z) = 0"

# p/q with deg <= 3 and q(0) = 1
RATIONAL_CORPUS = [
    ([1], [1, -1]),
    ([1], [1, 1]),
    ([1, 1], [1, -1]),
    ([1], [1, -1, 0, 0]),
    ([2, -1], [1, 0, -1]),
    ([1], [1, -2]),
    ([1, 0, 1], [1, -1]),
    ([1], [1, -1, -1]),
    ([0, 1], [1, 0, 0, -1]),
    ([3, 1, 1], [1, 1, 0, 1]),
    ([1, -1], [1, 0, 0, -1]),
    ([1], [1, -3, 3, -1]),
]

DSL_CORPUS = [
    "F(z) - (1-z)*F(z^2) = 0",
    "(1-z^2)*F(z^2) - (1-z)*F(z) = 0",
    "F(z) - (1-z)*(1-z^2)*F(z^4) = 0",
    "F(z) + (1+z+z^2)*F(z^3) = 0",
    "z*F(z) - F(z^2) = 0",
    "-3*z^2*(1-2*z)*F(z) + F(z^2) = 0",
    "F(z) - (1+z)*F(z^2) - z*F(z^4) = 0",
    "2*F(z) + 1/2*z*F(z^3) - F(z^9) = 0",
    "(1+z)^2*F(z) - F(z^2) = 0",
    "F(z) = (1-z)*F(z^2)",
    "F(z) - z^3*F(z^5) = 0",
    "(z - z^2)*F(z) + (1 - z^3)*F(z^2) = 0",
    "F(z) - F(z^2) + z*F(z^4) = 0",
    "7*F(z) - 3*z*F(z^3) = 0",
    "F(z)*(1 - z) - F(z^2) = 0",
    "(1 - z^4)*F(z) - (1 - z)^3*F(z^4) = 0",
    "F(z) + 2/3*F(z^2) = 0",
    "(z^2 + z)*F(z^3) - (1 + z)*F(z) = 0",
    "F(z) - (1 + z + z^2 + z^3)*F(z^4) = 0",
    "-F(z) + z^2*F(z^2) + (2 - z)*F(z^8) = 0",
]


def random_equation(rng: random.Random) -> MahlerEquation:
    """k in {2,3}, d <= 2, a_0 = z^delta0 * c with delta0 <= 4; other degrees <= 3."""
    k = rng.choice([2, 3])
    d = rng.randint(0, 2)
    coeffs = []
    for j in range(d + 1):
        while True:
            deg = rng.randint(0, 3)
            c = [rng.randint(-3, 3) for _ in range(deg + 1)]
            if j == 0:
                c = [0] * rng.randint(0, 4) + c
            if any(c) or (0 < j < d):
                break
        coeffs.append(c)
    return MahlerEquation.from_lists(k, coeffs)
