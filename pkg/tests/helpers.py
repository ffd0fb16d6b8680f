"""Independent brute-force oracles and random generators used across the tests."""

from __future__ import annotations

import itertools
import random

from distlap.graphs import Graph, canonical_form, is_connected


def brute_force_chromatic(g: Graph) -> int:
    """Minimum k such that some assignment of k colors is proper.

    Pure assignment search over product(range(k), repeat=n); deliberately
    independent of the DSATUR branch-and-bound path it cross-checks.
    """
    edges = g.edges()
    if not edges:
        return 1
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
    raise AssertionError("unreachable: n colors always suffice")


def brute_force_connected_classes(n: int) -> set[bytes]:
    """Canonical forms of all connected graphs on n vertices by labeled enumeration."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            out.add(canonical_form(g))
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n_lo: int, n_hi: int) -> Graph:
    while True:
        n = rng.randint(n_lo, n_hi)
        g = random_graph(rng, n, rng.uniform(0.2, 0.85))
        if is_connected(g):
            return g


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_part_sizes(rng: random.Random, max_total: int = 30) -> list[int]:
    """Random multipartite part vector with k >= 2 parts and total <= max_total."""
    k = rng.randint(2, 6)
    parts = [rng.randint(1, 8) for _ in range(k)]
    while sum(parts) > max_total:
        parts[parts.index(max(parts))] -= 1
    return parts
