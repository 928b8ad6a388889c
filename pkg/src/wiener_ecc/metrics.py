"""Shortest-path distances and the invariants derived from them.

Everything is exact integer arithmetic.  Disconnected graphs are rejected
rather than given infinite distances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, EmptyGraph, VertexOutOfRange
from .graph import Graph, _bits


@dataclass(frozen=True)
class DistanceMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class InvariantSummary:
    wiener: int
    ecc: tuple[int, ...]
    total_ecc: int
    radius: int
    diameter: int

    @property
    def wse(self) -> int:
        """Wiener index minus total eccentricity."""
        return self.wiener - self.total_ecc


def bfs_distances(g: Graph, s: int) -> list[int]:
    n = g.n
    if not 0 <= s < n:
        raise VertexOutOfRange(f"source {s} not in [0, {n})")
    rows = g.rows
    dist = [0] * n
    seen = frontier = 1 << s
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = level
    if seen != (1 << n) - 1:
        raise Disconnected(f"vertex {s} does not reach every vertex")
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        raise EmptyGraph("no distances on the empty graph")
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def wiener_index(d: DistanceMatrix) -> int:
    return sum(map(sum, d.rows)) // 2


def eccentricity_vector(d: DistanceMatrix) -> list[int]:
    # K1 gets [0]; every other connected graph has all entries >= 1.
    return [max(row) for row in d.rows]


def total_eccentricity(d: DistanceMatrix) -> int:
    return sum(eccentricity_vector(d))


def eccentric_vertices(d: DistanceMatrix, u: int) -> frozenset[int]:
    if not 0 <= u < d.n:
        raise VertexOutOfRange(f"vertex {u} not in [0, {d.n})")
    row = d.rows[u]
    top = max(row)
    return frozenset(v for v, dv in enumerate(row) if dv == top)


def summarize(d: DistanceMatrix) -> InvariantSummary:
    ecc = tuple(eccentricity_vector(d))
    return InvariantSummary(
        wiener=wiener_index(d),
        ecc=ecc,
        total_ecc=sum(ecc),
        radius=min(ecc),
        diameter=max(ecc),
    )


def invariant_summary(g: Graph) -> InvariantSummary:
    return summarize(all_pairs_distances(g))


def path_closed_forms(n: int) -> tuple[int, int]:
    """``(W(P_n), eps(P_n))`` from closed forms."""
    if n < 1:
        raise EmptyGraph("paths need at least one vertex")
    wiener = n * (n * n - 1) // 6
    total_ecc = sum(max(i, n - 1 - i) for i in range(n))
    return wiener, total_ecc
