"""Exact integer primitives: binomials, integer roots, digit lengths.

Everything here works on Python ints, so there is no overflow at any
magnitude and no floating point anywhere.
"""

import math

__all__ = ["binomial", "iroot", "digit_length"]


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {k})")
    return math.comb(n, k)


def iroot(z: int, d: int) -> int:
    """Return the unique m with m**d <= z < (m+1)**d.

    Monotone bisection on integers. The starting bracket uses
    z < 2**bit_length(z), hence the root is below 2**(bit_length // d + 1).
    """
    if d < 1:
        raise ValueError(f"root degree must be >= 1, got {d}")
    if z < 0:
        raise ValueError(f"cannot take a root of negative {z}")
    if d == 1 or z < 2:
        return z
    if d == 2:
        return math.isqrt(z)
    lo, hi = 0, min(z, 1 << (z.bit_length() // d + 1))
    # invariant: lo**d <= z < (hi + 1)**d
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** d <= z:
            lo = mid
        else:
            hi = mid - 1
    return lo


def digit_length(x: int, base: int = 2) -> int:
    """Number of base-`base` digits of x, i.e. ceil(log_base(x + 1)).

    digit_length(0, b) is 0: zero has an empty representation here.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if x < 0:
        raise ValueError(f"digit_length needs a non-negative integer, got {x}")
    if base == 2:
        return x.bit_length()
    n, power = 0, 1
    while power <= x:
        power *= base
        n += 1
    return n
