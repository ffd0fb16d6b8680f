"""Exact graph coloring: DSATUR branch and bound plus a max-largest-class search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from distlap.graphs import Graph, _bits, complement, induced_subgraph

MAX_ELL1_VERTICES = 16


@dataclass(frozen=True)
class ColoringResult:
    """An optimal proper coloring with sizes sorted nonincreasing."""

    chi: int
    classes: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    b_chi: int  # n + ceil(n / chi)


def is_proper(g: Graph, classes: Iterable[Iterable[int]]) -> bool:
    """True iff no class contains an edge; raises if classes do not partition V."""
    blocks = [sorted(c) for c in classes]
    flat = sorted(v for b in blocks for v in b)
    if flat != list(range(g.n)):
        raise ValueError("classes do not partition the vertex set")
    for block in blocks:
        mask = 0
        for v in block:
            mask |= 1 << v
        for v in block:
            if g.adj[v] & mask:
                return False
    return True


def _dsatur_greedy(g: Graph) -> list[int]:
    """Greedy DSATUR coloring; ties broken by lowest vertex index."""
    n = g.n
    colors = [-1] * n
    nb_colors = [0] * n  # bitmask of colors on colored neighbors
    for _ in range(n):
        best, best_sat = -1, -1
        for v in range(n):
            if colors[v] < 0:
                sat = nb_colors[v].bit_count()
                if sat > best_sat:
                    best, best_sat = v, sat
        c = 0
        while nb_colors[best] >> c & 1:
            c += 1
        colors[best] = c
        for u in _bits(g.adj[best]):
            if colors[u] < 0:
                nb_colors[u] |= 1 << c
    return colors


def _greedy_clique(g: Graph) -> list[int]:
    """Greedily grown clique (chromatic lower bound); deterministic."""
    n = g.n
    start = max(range(n), key=lambda v: (g.degree(v), -v))
    clique = [start]
    common = g.adj[start]
    while common:
        v = max(_bits(common), key=lambda u: (g.degree(u), -u))
        clique.append(v)
        common &= g.adj[v]
    return clique


def _k_colorable(g: Graph, k: int) -> list[int] | None:
    """Exact decision search: a proper coloring with at most k colors, or None.

    Backtracking in DSATUR order (ties by lowest index) with new-color symmetry
    breaking, so the result is deterministic for a fixed labeling.
    """
    n = g.n
    if k <= 0:
        return None
    colors = [-1] * n
    nb_colors = [0] * n

    def pick() -> int:
        best, best_sat = -1, -1
        for v in range(n):
            if colors[v] < 0:
                sat = nb_colors[v].bit_count()
                if sat > best_sat:
                    best, best_sat = v, sat
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        limit = min(used, k - 1)  # colors 0..used-1 plus at most one fresh color
        for c in range(limit + 1):
            if nb_colors[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in _bits(g.adj[v]):
                if colors[u] < 0 and not nb_colors[u] >> c & 1:
                    nb_colors[u] |= 1 << c
                    touched.append(u)
            if rec(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                nb_colors[u] &= ~(1 << c)
        return False

    return colors if rec(0, 0) else None


def _best_coloring(g: Graph) -> list[int]:
    greedy = _dsatur_greedy(g)
    ub = max(greedy) + 1
    lb = len(_greedy_clique(g))
    best = greedy
    k = ub - 1
    while k >= lb:
        attempt = _k_colorable(g, k)
        if attempt is None:
            break
        best = attempt
        k -= 1
    return best


def _to_result(g: Graph, colors: Sequence[int]) -> ColoringResult:
    chi = max(colors) + 1
    by_color: list[list[int]] = [[] for _ in range(chi)]
    for v, c in enumerate(colors):
        by_color[c].append(v)
    ordered = sorted(by_color, key=lambda block: (-len(block), block))
    classes = tuple(tuple(block) for block in ordered)
    sizes = tuple(len(block) for block in ordered)
    return ColoringResult(chi=chi, classes=classes, sizes=sizes,
                          b_chi=g.n + math.ceil(g.n / chi))


def chromatic_number(g: Graph) -> int:
    return max(_best_coloring(g)) + 1


def optimal_coloring(g: Graph) -> ColoringResult:
    """One optimal coloring, deterministic for a fixed vertex labeling."""
    return _to_result(g, _best_coloring(g))


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as bitmasks (Bron-Kerbosch on the complement)."""
    comp = complement(g)
    out: list[int] = []
    full = (1 << g.n) - 1

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: (comp.adj[u] & p).bit_count())
        for v in _bits(p & ~comp.adj[pivot]):
            expand(r | 1 << v, p & comp.adj[v], x & comp.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return out


def max_ell1_coloring(g: Graph) -> ColoringResult:
    """Among all optimal colorings, one whose largest class is as big as possible.

    Tries each maximal independent set of size >= ceil(n/chi) as the first
    class, largest first, and keeps the first whose removal leaves a
    (chi-1)-colorable graph. Guarded to n <= 16.
    """
    if g.n > MAX_ELL1_VERTICES:
        raise ValueError(f"max_ell1_coloring is guarded to n <= {MAX_ELL1_VERTICES}")
    chi = chromatic_number(g)
    if chi == 1:
        return _to_result(g, [0] * g.n)

    floor_needed = math.ceil(g.n / chi)
    candidates = [m for m in _maximal_independent_sets(g) if m.bit_count() >= floor_needed]
    candidates.sort(key=lambda m: (-m.bit_count(), m))
    for mask in candidates:
        members = list(_bits(mask))
        rest = [v for v in range(g.n) if not mask >> v & 1]
        sub, old = induced_subgraph(g, rest)
        sub_colors = _k_colorable(sub, chi - 1)
        if sub_colors is None:
            continue
        colors = [0] * g.n
        for v in members:
            colors[v] = 0
        for i, c in enumerate(sub_colors):
            colors[old[i]] = c + 1
        return _to_result(g, colors)
    raise RuntimeError("no optimal coloring found; chromatic number inconsistent")
