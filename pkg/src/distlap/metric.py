"""Exact integer distance data and the distance Laplacian matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from distlap.graphs import Graph, _bits


@dataclass(frozen=True)
class DistanceData:
    """All-pairs hop distances with derived transmissions, diameter, Wiener index."""

    dist: np.ndarray  # (n, n) int64, symmetric, zero diagonal
    tr: np.ndarray    # (n,) int64 row sums of dist
    diameter: int
    wiener: int

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])


def apsp(g: Graph) -> DistanceData:
    """Breadth-first search from every source; raises ValueError if disconnected."""
    n = g.n
    full = (1 << n) - 1
    dist = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        seen = 1 << s
        frontier = seen
        d = 0
        row = dist[s]
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            d += 1
            for v in _bits(frontier):
                row[v] = d
            seen |= frontier
        if seen != full:
            raise ValueError("graph is disconnected: unreachable vertex pair")
    tr = dist.sum(axis=1)
    return DistanceData(dist=dist, tr=tr, diameter=int(dist.max()), wiener=int(tr.sum()) // 2)


def distance_laplacian(dd: DistanceData) -> np.ndarray:
    """Integer matrix diag(tr) - dist; rows sum to zero exactly."""
    return np.diag(dd.tr) - dd.dist


def diameter(g: Graph) -> int:
    return apsp(g).diameter
