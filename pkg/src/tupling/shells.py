"""Shell numberings and executable checks of their characterisations.

A shell numbering sigma for a d-tupling f is any map with
sigma(x) < sigma(y) => f(x) < f(y). The checks here test that property
(and its consequences) on finite prefixes of N and finite sets of points.
Every check returns a :class:`Verdict` carrying the first counterexample.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

from .natmath import binomial, digit_length, iroot
from .pairings2d import dyadic_shell

__all__ = [
    "INFINITE",
    "ShellNumbering",
    "Verdict",
    "diagonal_shells",
    "cubic_shells",
    "dyadic_shells",
    "constant_shells",
    "custom_shells",
    "check_shell_numbering_prefix",
    "check_definition_pairwise",
    "check_shell_inequality",
    "is_max_dominating_prefix",
    "check_digit_bound",
    "check_cubic_root_identity",
    "digit_bound_points",
]

#: Stand-in for an infinite |U_sigma^{<n}|.
INFINITE = math.inf


@dataclass(frozen=True)
class ShellNumbering:
    """A shell numbering ``sigma`` with optional closed-form shell counts.

    ``count_below(n)`` is the number of points with shell number < n, or
    :data:`INFINITE`. Custom numberings without a closed form may instead
    give ``box``: per-axis maxima of a box known to contain every point
    whose shell number is below any n that will be queried.
    """

    sigma: Callable[[Sequence[int]], int]
    kind: str = "custom"
    dim: Optional[int] = None
    count_below: Optional[Callable[[int], Any]] = None
    box: Optional[tuple[int, ...]] = None

    def __call__(self, point):
        return self.sigma(point)

    def count(self, n: int):
        """|U^{<n}|, from the closed form or by enumerating the box."""
        if self.count_below is not None:
            return self.count_below(n)
        if self.box is None:
            raise ValueError(
                f"{self.kind} shell numbering has neither a closed-form count "
                "nor a bounding box; refusing unbounded enumeration"
            )
        return sum(
            1
            for p in itertools.product(*(range(b + 1) for b in self.box))
            if self.sigma(p) < n
        )


def diagonal_shells(d: int) -> ShellNumbering:
    return ShellNumbering(
        sigma=sum,
        kind="diagonal",
        dim=d,
        count_below=lambda n: binomial(n + d - 1, d) if n > 0 else 0,
    )


def cubic_shells(d: int) -> ShellNumbering:
    return ShellNumbering(sigma=max, kind="cubic", dim=d, count_below=lambda n: n ** d)


def _dyadic_count(n):
    # shell < n  <=>  q(x, y) + 1 < 2**(n-1)
    return (1 << (n - 1)) - 1 if n >= 1 else 0


def dyadic_shells() -> ShellNumbering:
    return ShellNumbering(
        sigma=lambda p: dyadic_shell(*p), kind="dyadic", dim=2, count_below=_dyadic_count
    )


def constant_shells(k: int, d: int) -> ShellNumbering:
    """sigma(x) = k: a shell numbering for every tupling function."""
    return ShellNumbering(
        sigma=lambda p: k,
        kind="custom",
        dim=d,
        count_below=lambda n: 0 if n <= k else INFINITE,
    )


def custom_shells(sigma, d, count_below=None, box=None) -> ShellNumbering:
    if count_below is None and box is None:
        raise ValueError("custom shell numbering needs count_below or an enumeration box")
    return ShellNumbering(sigma=sigma, kind="custom", dim=d, count_below=count_below, box=box)


@dataclass
class Verdict:
    """Outcome of a check; truthy iff it passed."""

    name: str
    ok: bool
    checked: int = 0
    counterexample: Optional[dict] = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.name} ({self.checked} checked)"
        if not self.ok:
            msg += f": {self.detail or self.counterexample}"
        return msg


def check_shell_numbering_prefix(f, sigma, N: int) -> Verdict:
    """sigma(f.decode(i)) must be non-decreasing for i < N."""
    name = f"shell-prefix[{f.name},{getattr(sigma, 'kind', 'sigma')}]"
    prev_point = prev_shell = None
    for i in range(N):
        point = f.decode(i)
        shell = sigma(point)
        if prev_shell is not None and shell < prev_shell:
            return Verdict(
                name,
                False,
                checked=i + 1,
                counterexample={
                    "indices": (i - 1, i),
                    "points": (prev_point, point),
                    "shells": (prev_shell, shell),
                },
                detail=(
                    f"shell drops from {prev_shell} to {shell} between "
                    f"{prev_point}@{i - 1} and {point}@{i}"
                ),
            )
        prev_point, prev_shell = point, shell
    return Verdict(name, True, checked=N)


def check_definition_pairwise(f, sigma, N: int) -> Verdict:
    """Direct O(N^2) check of sigma(x) < sigma(y) => f(x) < f(y) on decoded points."""
    name = f"shell-definition[{f.name},{getattr(sigma, 'kind', 'sigma')}]"
    points = [f.decode(i) for i in range(N)]
    shells = [sigma(p) for p in points]
    codes = [f.encode(p) for p in points]
    for i, j in itertools.permutations(range(N), 2):
        if shells[i] < shells[j] and not codes[i] < codes[j]:
            return Verdict(
                name,
                False,
                checked=N,
                counterexample={"points": (points[i], points[j]), "codes": (codes[i], codes[j])},
            )
    return Verdict(name, True, checked=N)


def check_shell_inequality(f, sigma, points: Iterable[Sequence[int]]) -> Verdict:
    """|U^{<n}| <= f(x) < |U^{<n+1}| with n = sigma(x), at every given point.

    An infinite lower count can never be met; an infinite upper count is
    always met.
    """
    name = f"shell-inequality[{f.name},{getattr(sigma, 'kind', 'sigma')}]"
    if getattr(sigma, "count_below", None) is None and getattr(sigma, "box", None) is None:
        raise ValueError("shell numbering has no count_below and no enumeration box")
    cache = {}

    def count(n):
        if n not in cache:
            cache[n] = sigma.count(n)
        return cache[n]

    checked = 0
    for p in points:
        p = tuple(p)
        n = sigma(p)
        code = f.encode(p)
        lower, upper = count(n), count(n + 1)
        checked += 1
        if not (lower <= code < upper):
            return Verdict(
                name,
                False,
                checked=checked,
                counterexample={"point": p, "code": code, "shell": n, "bounds": (lower, upper)},
                detail=f"{p} has code {code} outside [{lower}, {upper}) for shell {n}",
            )
    return Verdict(name, True, checked=checked)


def is_max_dominating_prefix(f, N: int) -> Verdict:
    """max(f.decode(z)) <= z for all z < N."""
    name = f"max-dominating[{f.name}]"
    for z in range(N):
        point = f.decode(z)
        if max(point) > z:
            return Verdict(
                name,
                False,
                checked=z + 1,
                counterexample={"code": z, "point": point},
                detail=f"max{point} > {z}",
            )
    return Verdict(name, True, checked=N)


def digit_bound_points(base: int, n: int, d: int, max_points: int = 1 << 16):
    """Points whose coordinates each have at most n base-`base` digits.

    Exhaustive when the box has at most ``max_points`` points; otherwise
    every coordinate ranges over a boundary sample (both ends of the range,
    each power of the base and its neighbours).
    """
    limit = base ** n
    if limit ** d <= max_points:
        values = range(limit)
        exhaustive = True
    else:
        sample = {0, 1, 2, limit // 2, limit - 3, limit - 2, limit - 1}
        power = base
        while power < limit:
            sample.update((power - 1, power))
            power *= base
        values = sorted(v for v in sample if 0 <= v < limit)
        exhaustive = False
    return itertools.product(values, repeat=d), exhaustive


def check_digit_bound(f, base: int, n: int, d: int, max_points: int = 1 << 16) -> Verdict:
    """Codes of points with <= n-digit coordinates must have <= n*d digits."""
    name = f"digit-bound[{f.name},base={base},n={n},d={d}]"
    points, exhaustive = digit_bound_points(base, n, d, max_points)
    checked = 0
    for p in points:
        code = f.encode(p)
        checked += 1
        if digit_length(code, base) > n * d:
            return Verdict(
                name,
                False,
                checked=checked,
                counterexample={"point": p, "code": code, "digits": digit_length(code, base)},
                detail=f"{p} -> {code} has {digit_length(code, base)} > {n * d} digits",
            )
    return Verdict(name, True, checked=checked, extra={"exhaustive": exhaustive})


def check_cubic_root_identity(f, points: Iterable[Sequence[int]]) -> Verdict:
    """max(x) == floor(f(x) ** (1/d)) at every point; equivalent to cubic shells."""
    name = f"cubic-root-identity[{f.name}]"
    checked = 0
    for p in points:
        p = tuple(p)
        code = f.encode(p)
        checked += 1
        if iroot(code, len(p)) != max(p):
            return Verdict(
                name,
                False,
                checked=checked,
                counterexample={"point": p, "code": code},
                detail=f"iroot({code}, {len(p)}) != max{p}",
            )
    return Verdict(name, True, checked=checked)
