"""Twin vertex classes, complement components, and universal vertices."""

from __future__ import annotations

from dataclasses import dataclass

from distlap.graphs import Graph, _bits, complement, connected_components
from distlap.metric import DistanceData, apsp


@dataclass(frozen=True)
class TwinClass:
    """A maximal clique-twin or independent-twin class with its forced eigenvalue.

    Clique twins share closed neighborhoods and force Tr+1; independent twins
    share open neighborhoods and force Tr+2; either way with multiplicity at
    least s-1, where s = len(members).
    """

    kind: str                    # "clique" | "independent"
    members: tuple[int, ...]
    external: tuple[int, ...]    # common neighborhood outside the class
    rest_size: int               # n - s - |external|
    transmission: int            # shared transmission of the members
    forced_value: int
    forced_mult: int


def twin_classes(g: Graph, dd: DistanceData | None = None) -> list[TwinClass]:
    """Maximal twin classes of a connected graph, ordered by least member.

    Vertices are grouped by closed-neighborhood equality (clique twins) and by
    open-neighborhood equality (independent twins); only classes of size >= 2
    are emitted, and no vertex can appear in both kinds.
    """
    if g.n < 2:
        return []
    if dd is None:
        dd = apsp(g)

    closed: dict[int, list[int]] = {}
    open_: dict[int, list[int]] = {}
    for v in range(g.n):
        closed.setdefault(g.adj[v] | 1 << v, []).append(v)
        open_.setdefault(g.adj[v], []).append(v)

    out: list[TwinClass] = []
    for kind, groups in (("clique", closed), ("independent", open_)):
        for key, members in groups.items():
            s = len(members)
            if s < 2:
                continue
            member_mask = 0
            for v in members:
                member_mask |= 1 << v
            external_mask = (key & ~member_mask) if kind == "clique" else key
            tr = int(dd.tr[members[0]])
            bump = 1 if kind == "clique" else 2
            out.append(TwinClass(
                kind=kind,
                members=tuple(members),
                external=tuple(_bits(external_mask)),
                rest_size=g.n - s - external_mask.bit_count(),
                transmission=tr,
                forced_value=tr + bump,
                forced_mult=s - 1,
            ))
    out.sort(key=lambda t: t.members[0])
    return out


def complement_component_count(g: Graph) -> int:
    """Number of connected components of the complement graph."""
    return len(connected_components(complement(g)))


def universal_vertex_count(g: Graph) -> int:
    """Number of vertices adjacent to every other vertex."""
    return sum(1 for v in range(g.n) if g.degree(v) == g.n - 1)
