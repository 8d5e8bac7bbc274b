"""Two-dimensional pairing functions and their exact inverses.

Points are plain ``(x, y)`` tuples of ints.
"""

from enum import Enum

from .natmath import digit_length, iroot

__all__ = [
    "PairingKind",
    "cantor_positive",
    "cantor_positive_inverse",
    "cantor",
    "cantor_swapped",
    "cantor_inverse",
    "cantor_swapped_inverse",
    "rosenberg_strong",
    "rosenberg_strong_inverse",
    "dyadic",
    "dyadic_inverse",
    "dyadic_shell",
    "trailing_zeros",
]


class PairingKind(Enum):
    CANTOR_POSITIVE = "cantor-positive"
    CANTOR = "cantor"
    CANTOR_SWAPPED = "cantor-swapped"
    ROSENBERG_STRONG = "rs"
    DYADIC = "dyadic"

    @property
    def is_quadratic_polynomial(self):
        # Only the two Cantor variants on N^2 are quadratic polynomials;
        # p is quadratic too but lives on the positive integers.
        return self in (PairingKind.CANTOR, PairingKind.CANTOR_SWAPPED)


def _check_nat(*values):
    for v in values:
        if v < 0:
            raise ValueError(f"expected a non-negative integer, got {v}")


def _half(n):
    assert n % 2 == 0, f"odd numerator {n} in an exact halving"
    return n // 2


def cantor_positive(x: int, y: int) -> int:
    """Cantor's pairing function on the positive integers."""
    if x < 1 or y < 1:
        raise ValueError(f"cantor_positive is defined on positive integers, got ({x}, {y})")
    return _half(x * x + 2 * x * y + y * y - x - 3 * y + 2)


def cantor_positive_inverse(z: int) -> tuple[int, int]:
    if z < 1:
        raise ValueError(f"cantor_positive codes are positive, got {z}")
    x, y = cantor_inverse(z - 1)
    return x + 1, y + 1


def cantor(x: int, y: int) -> int:
    _check_nat(x, y)
    return _half(x * x + 2 * x * y + y * y + 3 * x + y)


def cantor_swapped(x: int, y: int) -> int:
    return cantor(y, x)


def cantor_inverse(z: int) -> tuple[int, int]:
    """Inverse of :func:`cantor`. The two components sum to the diagonal index w."""
    _check_nat(z)
    w = (iroot(8 * z + 1, 2) - 1) // 2
    return z - _half(w * (w + 1)), _half(w * (w + 3)) - z


def cantor_swapped_inverse(z: int) -> tuple[int, int]:
    x, y = cantor_inverse(z)
    return y, x


def rosenberg_strong(x: int, y: int) -> int:
    _check_nat(x, y)
    m = max(x, y)
    return m * m + m + x - y


def rosenberg_strong_inverse(z: int) -> tuple[int, int]:
    _check_nat(z)
    m = iroot(z, 2)
    r = z - m * m
    if r < m:
        return r, m
    return m, m * m + 2 * m - z


def dyadic(x: int, y: int) -> int:
    """2**y * (2x + 1) - 1."""
    _check_nat(x, y)
    return ((2 * x + 1) << y) - 1


def trailing_zeros(n: int) -> int:
    """Count trailing zero bits of a positive integer by repeated halving."""
    if n < 1:
        raise ValueError(f"trailing_zeros needs a positive integer, got {n}")
    count = 0
    while n % 2 == 0:
        n //= 2
        count += 1
    return count


def dyadic_inverse(z: int) -> tuple[int, int]:
    _check_nat(z)
    y = trailing_zeros(z + 1)
    return ((z + 1) >> y) // 2, y


def dyadic_shell(x: int, y: int) -> int:
    """Shell number of (x, y) under :func:`dyadic`: the bit count of q(x, y) + 1."""
    _check_nat(x, y)
    return y + 1 + digit_length(x, 2)
