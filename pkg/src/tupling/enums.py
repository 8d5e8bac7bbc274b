"""Enumerations of full binary trees, all binary trees and finite sequences.

Trees are nested tuples: the leaf ``o`` is ``LEAF == ()`` and ``tau(a, b)``
is the pair ``(a, b)``. Non-full binary trees (the output of defoliation)
use ``(left, right)`` with ``None`` marking a missing child, so the single
vertex is ``(None, None)``. Sequences are tuples of ints; ``()`` is the
empty sequence.

Each unranking walks f's inverse downwards. Termination relies on f being
max-dominating: every decoded index must be smaller than the one it came
from, and that is checked as we go.
"""

from typing import Callable, Optional

from .tuplings import TuplingFunction, rs_tupling, fold_tupling, CANTOR

__all__ = [
    "LEAF",
    "tau",
    "tree_height",
    "tree_unrank",
    "tree_rank",
    "tree_prefix",
    "defoliate",
    "all_trees_unrank",
    "seq_unrank_xi",
    "seq_rank_xi",
    "seq_unrank_zeta",
    "seq_rank_zeta",
    "rs_family",
    "fold_cantor_family",
    "format_tree",
    "parse_tree",
    "format_binary_tree",
    "format_seq",
    "parse_seq",
    "NotMaxDominating",
]

LEAF = ()


class NotMaxDominating(ValueError):
    """The pairing sent an index to a point with a coordinate >= the index."""


def tau(a, b):
    return (a, b)


def tree_height(t) -> int:
    stack = [(t, 0)]
    best = 0
    while stack:
        node, depth = stack.pop()
        if node:
            stack.append((node[0], depth + 1))
            stack.append((node[1], depth + 1))
        elif depth > best:
            best = depth
    return best


def _children(f, n):
    x, y = f.decode(n - 1)
    if x >= n or y >= n:
        raise NotMaxDominating(f"{f.name} decodes {n - 1} to {(x, y)}: not max-dominating")
    return x, y


def tree_unrank(n: int, f: TuplingFunction, memo: bool = True):
    """The n-th full binary tree: phi(0) = o, phi(f(x, y) + 1) = tau(phi(x), phi(y))."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    cache = {0: LEAF} if memo else None

    def go(k):
        if k == 0:
            return LEAF
        if cache is not None and k in cache:
            return cache[k]
        x, y = _children(f, k)
        t = (go(x), go(y))
        if cache is not None:
            cache[k] = t
        return t

    return go(n)


def tree_prefix(N: int, f: TuplingFunction) -> list:
    """[phi(0), ..., phi(N-1)] built bottom-up, sharing subtrees."""
    trees = []
    for n in range(N):
        if n == 0:
            trees.append(LEAF)
        else:
            x, y = _children(f, n)
            trees.append((trees[x], trees[y]))
    return trees


def tree_rank(t, f: TuplingFunction) -> int:
    """Index of t: rank(o) = 0, rank(tau(a, b)) = f(rank(a), rank(b)) + 1."""
    memo = {}

    def go(node):
        if not node:
            return 0
        key = id(node)
        if key not in memo:
            memo[key] = f.encode((go(node[0]), go(node[1]))) + 1
        return memo[key]

    return go(t)


def defoliate(t):
    """Delete every leaf of a non-trivial full binary tree."""
    if not t:
        raise ValueError("the trivial tree o has no defoliation")

    def go(node):
        if not node:
            return None
        return (go(node[0]), go(node[1]))

    return go(t)


def all_trees_unrank(n: int, f: TuplingFunction):
    """n-th binary tree (not necessarily full): D(phi(n + 1))."""
    return defoliate(tree_unrank(n + 1, f))


def seq_unrank_xi(n: int, f: TuplingFunction) -> tuple:
    """xi(0) = (); xi(f(x, y) + 1) = (y) if x == 0 else xi(x) + (y)."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    items = []
    while n:
        x, y = _children(f, n)
        items.append(y)
        n = x
    return tuple(reversed(items))


def seq_rank_xi(u, f: TuplingFunction) -> int:
    n = 0
    for y in u:
        n = f.encode((n, y)) + 1
    return n


def rs_family(d: int) -> TuplingFunction:
    return rs_tupling(d)


def fold_cantor_family(d: int) -> TuplingFunction:
    return fold_tupling(CANTOR, d)


def seq_unrank_zeta(
    n: int, f: TuplingFunction, g: Callable[[int], TuplingFunction] = rs_family
) -> tuple:
    """zeta(0) = (); zeta(f(x, y) + 1) = g_{y+1}^{-1}(x)."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    if n == 0:
        return ()
    x, y = f.decode(n - 1)
    return tuple(g(y + 1).decode(x))


def seq_rank_zeta(u, f: TuplingFunction, g: Callable[[int], TuplingFunction] = rs_family) -> int:
    u = tuple(u)
    if not u:
        return 0
    return f.encode((g(len(u)).encode(u), len(u) - 1)) + 1


# -- text formats -------------------------------------------------------------


def format_tree(t) -> str:
    if not t:
        return "o"
    return f"({format_tree(t[0])} {format_tree(t[1])})"


def format_binary_tree(t: Optional[tuple]) -> str:
    """Non-full trees: ``_`` for a missing child, ``(L R)`` for a vertex."""
    if t is None:
        return "_"
    return f"({format_binary_tree(t[0])} {format_binary_tree(t[1])})"


def parse_tree(text: str):
    """Parse ``tree := "o" | "(" tree " " tree ")"``."""
    pos = 0

    def fail(msg):
        raise ValueError(f"bad tree at offset {pos}: {msg} in {text!r}")

    def go():
        nonlocal pos
        if text.startswith("o", pos):
            pos += 1
            return LEAF
        if not text.startswith("(", pos):
            fail("expected 'o' or '('")
        pos += 1
        left = go()
        if not text.startswith(" ", pos):
            fail("expected a single space")
        pos += 1
        right = go()
        if not text.startswith(")", pos):
            fail("expected ')'")
        pos += 1
        return (left, right)

    t = go()
    if pos != len(text):
        fail("trailing characters")
    return t


def format_seq(u) -> str:
    return ",".join(str(v) for v in u)


def parse_seq(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    items = []
    for part in text.split(","):
        part = part.strip()
        if not (part.isascii() and part.isdigit()):
            raise ValueError(f"bad sequence item {part!r} in {text!r}")
        items.append(int(part))
    return tuple(items)
