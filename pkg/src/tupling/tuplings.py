"""d-dimensional tupling functions N^d <-> N.

A :class:`TuplingFunction` bundles an encoder, its inverse and (when there
is one) the function's standard shell numbering. Factories build the
Rosenberg-Strong, Skolem and Chowla families, left-fold compositions of a
pairing, and argument permutations of any tupling.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from . import pairings2d as p2
from .natmath import binomial, iroot
from .shells import ShellNumbering, cubic_shells, diagonal_shells, dyadic_shells

__all__ = [
    "TuplingFunction",
    "rs_encode",
    "rs_decode",
    "rs_decode_steps",
    "skolem_encode",
    "skolem_decode",
    "chowla_encode",
    "chowla_decode",
    "chowla_decode_search",
    "diagonal_shell_index",
    "rs_tupling",
    "skolem_tupling",
    "chowla_tupling",
    "fold_tupling",
    "permute_tupling",
    "morales_arredondo_a",
    "morales_arredondo_bound",
    "CANTOR_POSITIVE",
    "CANTOR",
    "CANTOR_SWAPPED",
    "RS2",
    "DYADIC",
    "FUNCTION_NAMES",
    "make_tupling",
]


def _point(p, d):
    p = tuple(p)
    if len(p) != d:
        raise ValueError(f"expected a point of dimension {d}, got {len(p)} coordinates")
    for v in p:
        if v < 0:
            raise ValueError(f"coordinates must be non-negative, got {p}")
    return p


def _check_dim(d):
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")


@dataclass(frozen=True)
class TuplingFunction:
    name: str
    dim: int
    encoder: Callable[[tuple], int]
    decoder: Callable[[int], tuple]
    standard_shell: Optional[ShellNumbering] = None

    def encode(self, point: Sequence[int]) -> int:
        return self.encoder(_point(point, self.dim))

    def decode(self, z: int) -> tuple:
        if z < 0:
            raise ValueError(f"codes are non-negative, got {z}")
        return self.decoder(z)

    def __call__(self, *coords):
        return self.encode(coords)


# -- Rosenberg-Strong ---------------------------------------------------------


def rs_encode(p: Sequence[int], d: int) -> int:
    _check_dim(d)
    p = _point(p, d)
    z = p[0]
    for k in range(2, d + 1):
        m = max(p[:k])
        z += m ** k + (m - p[k - 1]) * ((m + 1) ** (k - 1) - m ** (k - 1))
    return z


def rs_decode_steps(z: int, d: int):
    """Decode like :func:`rs_decode`, also yielding ``(k, m, x_k)`` per peeled coordinate."""
    _check_dim(d)
    if z < 0:
        raise ValueError(f"codes are non-negative, got {z}")
    coords = []
    steps = []
    for k in range(d, 1, -1):
        m = iroot(z, k)
        width = (m + 1) ** (k - 1) - m ** (k - 1)
        xk = m - max(0, z - m ** k - m ** (k - 1)) // width
        steps.append((k, m, xk))
        z -= m ** k + (m - xk) * width
        coords.append(xk)
    coords.append(z)
    return tuple(reversed(coords)), steps


def rs_decode(z: int, d: int) -> tuple:
    return rs_decode_steps(z, d)[0]


# -- Skolem -------------------------------------------------------------------


def skolem_encode(p: Sequence[int], d: int) -> int:
    _check_dim(d)
    p = _point(p, d)
    total = 0
    prefix = 0
    for i, x in enumerate(p, start=1):
        prefix += x
        total += binomial(prefix + i - 1, i)
    return total


def _largest_top(rem, i, upper=None):
    """Largest c (< upper if given) with C(c, i) <= rem."""
    lo = i - 1  # C(i-1, i) == 0
    if upper is None:
        hi = max(lo + 1, i)
        while binomial(hi, i) <= rem:
            hi *= 2
    else:
        hi = upper
    # C(lo, i) <= rem < C(hi, i)  (or hi is the exclusive cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


def canonical_representation(z: int, d: int) -> list:
    """The d-canonical (combinatorial number system) digits c_d > ... > c_1 >= 0."""
    _check_dim(d)
    rem = z
    digits = []
    upper = None
    for i in range(d, 0, -1):
        c = _largest_top(rem, i, upper)
        rem -= binomial(c, i)
        digits.append(c)
        upper = c
    if rem != 0:
        raise ArithmeticError(f"canonical representation of {z} left remainder {rem}")
    return digits[::-1]  # c_1, ..., c_d


def skolem_decode(z: int, d: int) -> tuple:
    if z < 0:
        raise ValueError(f"codes are non-negative, got {z}")
    c = canonical_representation(z, d)
    return (c[0],) + tuple(c[i] - c[i - 1] - 1 for i in range(1, d))


# -- Chowla -------------------------------------------------------------------


def chowla_encode(p: Sequence[int], d: int) -> int:
    _check_dim(d)
    p = _point(p, d)
    total = binomial(sum(p) + d, d) - 1
    for i in range(1, d):
        total -= binomial(sum(p[i:]) + d - i - 1, d - i)
    return total


def diagonal_shell_index(z: int, d: int) -> int:
    """The w with C(w+d-1, d) <= z < C(w+d, d)."""
    _check_dim(d)
    lo, hi = 0, 1
    while binomial(hi + d, d) <= z:
        hi *= 2
    # C(lo+d-1, d) <= z < C(hi+d, d)
    while lo < hi:
        mid = (lo + hi) // 2
        if binomial(mid + d, d) <= z:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def chowla_decode_search(z: int, d: int) -> tuple:
    """Invert chowla_encode by searching the diagonal shell containing z."""
    _check_dim(d)
    w = diagonal_shell_index(z, d)
    for p in _compositions(w, d):
        if chowla_encode(p, d) == z:
            return p
    raise ArithmeticError(f"no point in diagonal shell {w} has Chowla code {z} (d={d})")


def chowla_decode(z: int, d: int) -> tuple:
    """Invert chowla_encode.

    Within shell w, C(w+d, d) - 1 - z is Skolem's (d-1)-tupling of the
    reversed tail (x_d, ..., x_2); x_1 is whatever remains of w.
    """
    _check_dim(d)
    if z < 0:
        raise ValueError(f"codes are non-negative, got {z}")
    if d == 1:
        return (z,)
    w = diagonal_shell_index(z, d)
    tail = skolem_decode(binomial(w + d, d) - 1 - z, d - 1)[::-1]
    x1 = w - sum(tail)
    if x1 < 0:
        raise ArithmeticError(f"Chowla inverse left shell {w} for code {z} (d={d})")
    return (x1,) + tail


# -- families -----------------------------------------------------------------


@lru_cache(maxsize=None)
def rs_tupling(d: int) -> TuplingFunction:
    _check_dim(d)
    return TuplingFunction(
        f"rs{d}", d, lambda p: rs_encode(p, d), lambda z: rs_decode(z, d), cubic_shells(d)
    )


@lru_cache(maxsize=None)
def skolem_tupling(d: int) -> TuplingFunction:
    _check_dim(d)
    return TuplingFunction(
        f"skolem{d}",
        d,
        lambda p: skolem_encode(p, d),
        lambda z: skolem_decode(z, d),
        diagonal_shells(d),
    )


@lru_cache(maxsize=None)
def chowla_tupling(d: int) -> TuplingFunction:
    _check_dim(d)
    return TuplingFunction(
        f"chowla{d}",
        d,
        lambda p: chowla_encode(p, d),
        lambda z: chowla_decode(z, d),
        diagonal_shells(d),
    )


def fold_tupling(f: TuplingFunction, d: int) -> TuplingFunction:
    """Left fold of a pairing: f(...f(f(x1, x2), x3)..., xd)."""
    _check_dim(d)
    if f.dim != 2:
        raise ValueError(f"fold_tupling needs a pairing (dim 2), got dim {f.dim}")

    def encode(p):
        z = p[0]
        for x in p[1:]:
            z = f.encode((z, x))
        return z

    def decode(z):
        tail = []
        for _ in range(d - 1):
            z, v = f.decode(z)
            tail.append(v)
        return (z,) + tuple(reversed(tail))

    return TuplingFunction(f"fold-{f.name}-d{d}", d, encode, decode, None)


def permute_tupling(f: TuplingFunction, perm: Sequence[int]) -> TuplingFunction:
    """g(p) = f(p[perm[0]], ..., p[perm[d-1]]), with 0-based ``perm``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(f.dim)):
        raise ValueError(f"{perm} is not a permutation of 0..{f.dim - 1}")

    def encode(p):
        return f.encode(tuple(p[j] for j in perm))

    def decode(z):
        q = f.decode(z)
        p = [0] * f.dim
        for i, j in enumerate(perm):
            p[j] = q[i]
        return tuple(p)

    shell = f.standard_shell
    if shell is not None and shell.kind not in ("diagonal", "cubic"):
        shell = None  # only symmetric numberings survive a permutation
    name = f.name if perm == tuple(range(f.dim)) else f"{f.name}{list(perm)}"
    return TuplingFunction(name, f.dim, encode, decode, shell)


# -- Morales-Arredondo --------------------------------------------------------


@lru_cache(maxsize=None)
def morales_arredondo_a(d: int) -> int:
    _check_dim(d)
    if d == 1:
        return 1
    return sum(
        math.factorial(i - 1) * morales_arredondo_a(d // i)
        for i in range(2, d + 1)
        if d % i == 0
    )


def morales_arredondo_bound(d: int) -> int:
    """d! * a(d), the lower bound on the number of degree-d polynomial d-tuplings."""
    return math.factorial(d) * morales_arredondo_a(d)


# -- named built-ins ----------------------------------------------------------

CANTOR_POSITIVE = TuplingFunction(
    "cantor-positive",
    2,
    lambda p: p2.cantor_positive(*p),
    p2.cantor_positive_inverse,
    None,
)
CANTOR = TuplingFunction(
    "cantor", 2, lambda p: p2.cantor(*p), p2.cantor_inverse, diagonal_shells(2)
)
CANTOR_SWAPPED = TuplingFunction(
    "cantor-swapped",
    2,
    lambda p: p2.cantor_swapped(*p),
    p2.cantor_swapped_inverse,
    diagonal_shells(2),
)
RS2 = TuplingFunction(
    "rs2", 2, lambda p: p2.rosenberg_strong(*p), p2.rosenberg_strong_inverse, cubic_shells(2)
)
DYADIC = TuplingFunction("dyadic", 2, lambda p: p2.dyadic(*p), p2.dyadic_inverse, dyadic_shells())

FUNCTION_NAMES = (
    "cantor",
    "cantor-swapped",
    "cantor-positive",
    "rs",
    "skolem",
    "chowla",
    "dyadic",
    "fold-cantor",
    "fold-rs",
)


def make_tupling(name: str, dim: int) -> TuplingFunction:
    """Resolve a (name, dim) selector to a tupling function."""
    _check_dim(dim)
    two_d = {
        "cantor": CANTOR,
        "cantor-swapped": CANTOR_SWAPPED,
        "cantor-positive": CANTOR_POSITIVE,
        "dyadic": DYADIC,
    }
    if name in two_d:
        if dim != 2:
            raise ValueError(f"{name} is only defined for dim 2, got {dim}")
        return two_d[name]
    if name == "rs":
        return RS2 if dim == 2 else rs_tupling(dim)
    if name == "skolem":
        return skolem_tupling(dim)
    if name == "chowla":
        return chowla_tupling(dim)
    if name in ("fold-cantor", "fold-rs"):
        if dim < 2:
            raise ValueError(f"{name} requires dim >= 2, got {dim}")
        return fold_tupling(CANTOR if name == "fold-cantor" else RS2, dim)
    raise ValueError(f"unknown function {name!r}; choose from {', '.join(FUNCTION_NAMES)}")
