"""Brute-force oracles and the property suite behind ``tupling verify``.

The oracle never calls a decoder: it evaluates ``encode`` over a box of
points, sorts by code, and answers inverse queries by table lookup. That
gives ground truth for every closed-form inverse on the prefix of codes
that the box provably covers.
"""

import bisect
import itertools
from dataclasses import dataclass, field
from typing import Sequence, Union

from . import enums
from .natmath import iroot
from .shells import (
    Verdict,
    check_digit_bound,
    check_shell_inequality,
    check_shell_numbering_prefix,
    is_max_dominating_prefix,
)
from .tuplings import (
    CANTOR,
    CANTOR_SWAPPED,
    DYADIC,
    RS2,
    TuplingFunction,
    chowla_tupling,
    fold_tupling,
    rs_decode_steps,
    rs_tupling,
    skolem_tupling,
)

__all__ = [
    "BijectivityError",
    "CodeTable",
    "build_table",
    "table_inverse",
    "crosscheck",
    "check_bijection_prefix",
    "default_box",
    "builtin_tuplings",
    "run_suite",
]


class BijectivityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CodeTable:
    entries: tuple  # ((code, point), ...) sorted by code
    box: tuple
    prefix: int  # largest K with 0..K all present, -1 if 0 is absent
    _codes: tuple = field(repr=False, default=())

    def __len__(self):
        return len(self.entries)

    @property
    def codes(self):
        return self._codes


def build_table(f: TuplingFunction, box_max: Union[int, Sequence[int]]) -> CodeTable:
    """Encode every point with coordinate i <= box_max[i] and sort by code."""
    box = (box_max,) * f.dim if isinstance(box_max, int) else tuple(box_max)
    if len(box) != f.dim or any(b < 0 for b in box):
        raise ValueError(f"bad box {box} for dimension {f.dim}")
    entries = sorted(
        (f.encode(p), p) for p in itertools.product(*(range(b + 1) for b in box))
    )
    for (c1, p1), (c2, p2) in zip(entries, entries[1:]):
        if c1 == c2:
            raise BijectivityError(f"{f.name}: {p1} and {p2} both encode to {c1}")
    prefix = -1
    for code, _ in entries:
        if code != prefix + 1:
            break
        prefix = code
    codes = tuple(c for c, _ in entries)
    return CodeTable(tuple(entries), box, prefix, codes)


def table_inverse(table: CodeTable, z: int) -> tuple:
    i = bisect.bisect_left(table.codes, z)
    if i == len(table.codes) or table.codes[i] != z:
        raise KeyError(f"code {z} not present in table over box {table.box}")
    return table.entries[i][1]


def crosscheck(f: TuplingFunction, box_max, prefix: int, table: CodeTable = None) -> Verdict:
    """decode agrees with the table inverse, and encode undoes decode, for z <= prefix."""
    table = table or build_table(f, box_max)
    name = f"oracle-crosscheck[{f.name},box={table.box[0] if len(set(table.box)) == 1 else table.box}]"
    if prefix > table.prefix:
        raise ValueError(
            f"prefix {prefix} exceeds the table's sound prefix {table.prefix} for {f.name}"
        )
    for z in range(prefix + 1):
        expected = table_inverse(table, z)
        got = tuple(f.decode(z))
        if got != expected:
            return Verdict(
                name, False, checked=z + 1,
                counterexample={"code": z, "decoded": got, "table": expected},
                detail=f"decode({z}) = {got}, table says {expected}",
            )
        if f.encode(got) != z:
            return Verdict(
                name, False, checked=z + 1,
                counterexample={"code": z, "decoded": got, "reencoded": f.encode(got)},
            )
    return Verdict(name, True, checked=prefix + 1, extra={"sound_prefix": table.prefix})


def check_bijection_prefix(f: TuplingFunction, N: int) -> Verdict:
    """decode(0..N-1) pairwise distinct and encode(decode(z)) == z."""
    name = f"bijection-prefix[{f.name}]"
    seen = {}
    for z in range(N):
        p = tuple(f.decode(z))
        if len(p) != f.dim or any(v < 0 for v in p):
            return Verdict(name, False, checked=z + 1, counterexample={"code": z, "point": p})
        if p in seen:
            return Verdict(
                name, False, checked=z + 1,
                counterexample={"codes": (seen[p], z), "point": p},
                detail=f"codes {seen[p]} and {z} both decode to {p}",
            )
        seen[p] = z
        back = f.encode(p)
        if back != z:
            return Verdict(
                name, False, checked=z + 1,
                counterexample={"code": z, "point": p, "reencoded": back},
                detail=f"encode(decode({z})) = {back}",
            )
    return Verdict(name, True, checked=N)


def default_box(d: int) -> int:
    """Per-axis box size keeping tables well under 10**6 entries."""
    return {1: 10 ** 5, 2: 300, 3: 40, 4: 14}.get(d, max(1, iroot(10 ** 5, d) - 1))


def builtin_tuplings() -> list:
    return [
        CANTOR,
        CANTOR_SWAPPED,
        RS2,
        DYADIC,
        rs_tupling(3),
        rs_tupling(4),
        skolem_tupling(3),
        skolem_tupling(4),
        chowla_tupling(3),
        chowla_tupling(4),
        fold_tupling(CANTOR, 3),
        fold_tupling(RS2, 3),
    ]


def _rs_invariants(limit):
    """r_d for d <= 4: cubic bounds, root identity, x_d range, round trips."""
    name = "rs-decoder-invariants"
    checked = 0
    for d in range(1, 5):
        f = rs_tupling(d)
        for p in itertools.product(range(7), repeat=d):
            z, m = f.encode(p), max(p)
            checked += 1
            if not (m ** d <= z < (m + 1) ** d) or iroot(z, d) != m or f.decode(z) != p:
                return Verdict(name, False, checked, {"point": p, "code": z})
        for z in range(limit):
            point, steps = rs_decode_steps(z, d)
            checked += 1
            if any(not 0 <= xk <= m for _, m, xk in steps) or f.encode(point) != z:
                return Verdict(name, False, checked, {"code": z, "steps": steps})
    return Verdict(name, True, checked)


def _tree_suite(limit, pairings):
    out = []
    for f in pairings:
        name = f"tree-enumeration[{f.name}]"
        trees = enums.tree_prefix(limit, f)
        ok = len(set(trees)) == len(trees)
        bad = next((i for i, t in enumerate(trees) if enums.tree_rank(t, f) != i), None)
        out.append(Verdict(name, ok and bad is None, limit,
                           None if bad is None else {"index": bad}))
        if f.standard_shell is not None and f.standard_shell.kind == "cubic":
            heights = [enums.tree_height(t) for t in trees]
            drop = next((i for i in range(1, len(heights)) if heights[i] < heights[i - 1]), None)
            out.append(Verdict(f"tree-height-monotone[{f.name}]", drop is None, limit,
                               None if drop is None else {"index": drop}))
    return out


def _seq_suite(limit, pairings):
    out = []
    for f in pairings:
        for scheme, unrank, rank in (
            ("xi", enums.seq_unrank_xi, enums.seq_rank_xi),
            ("zeta", enums.seq_unrank_zeta, enums.seq_rank_zeta),
        ):
            name = f"seq-roundtrip[{scheme},{f.name}]"
            seen = set()
            bad = None
            for n in range(limit):
                u = unrank(n, f)
                if u in seen or rank(u, f) != n:
                    bad = n
                    break
                seen.add(u)
            out.append(Verdict(name, bad is None, limit, None if bad is None else {"index": bad}))
    return out


def run_suite(limit: int, tuplings=None, progress=None) -> list:
    """Run every property up to ``limit`` and return the verdicts in a fixed order."""
    tuplings = builtin_tuplings() if tuplings is None else tuplings
    verdicts = []

    def add(v):
        verdicts.append(v)
        if progress:
            progress(v)

    for f in tuplings:
        add(check_bijection_prefix(f, limit))
        add(is_max_dominating_prefix(f, limit))
        if f.standard_shell is not None:
            add(check_shell_numbering_prefix(f, f.standard_shell, limit))
            pts = [f.decode(z) for z in range(min(limit, 2000))]
            add(check_shell_inequality(f, f.standard_shell, pts))
        if f.standard_shell is not None and f.standard_shell.kind == "cubic":
            for n in range(1, 5):
                add(check_digit_bound(f, 2, n, f.dim))
        table = build_table(f, default_box(f.dim))
        add(crosscheck(f, None, min(limit - 1, table.prefix), table=table))
    add(_rs_invariants(limit))
    pairings = [p for p in tuplings if p.dim == 2 and p.name != "cantor-positive"]
    for v in _tree_suite(limit, pairings):
        add(v)
    for v in _seq_suite(min(limit, 1000), pairings):
        add(v)
    return verdicts
