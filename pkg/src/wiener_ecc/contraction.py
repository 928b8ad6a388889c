"""Edge contraction ``G -> G.e`` on simple graphs, and contraction chains.

Relabeling convention: contracting ``x-y`` with ``x < y`` puts the merged
vertex at index ``x``, deletes ``y``, and shifts every index above ``y``
down by one.  The loop from the contracted edge is dropped and parallel
edges through common neighbours collapse, so the result stays simple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, GraphError, NotAnEdge, TooSmall
from .graph import Edge, Graph, is_connected, write_graph6
from .metrics import invariant_summary
from .rng import SplitMix64

STRATEGIES = ("first-edge", "random", "max-degree")


@dataclass(frozen=True)
class ContractionResult:
    contracted: Graph
    alpha: int
    fwd_map: tuple[int, ...]


def _squeeze(mask: int, gone: int) -> int:
    low = mask & ((1 << gone) - 1)
    return low | (mask >> (gone + 1) << gone)


def contract_edge(g: Graph, e: Edge | tuple[int, int]) -> ContractionResult:
    if not isinstance(e, Edge):
        e = Edge(*e)
    if g.n < 2:
        raise TooSmall("contraction needs at least two vertices")
    x, y = e.a, e.b
    if y >= g.n or not g.rows[x] >> y & 1:
        raise NotAnEdge(f"{x}-{y} is not an edge")
    rows = g.rows
    xbit, ybit = 1 << x, 1 << y
    new_rows = []
    for u, row in enumerate(rows):
        if u == y:
            continue
        if u == x:
            row = (rows[x] | rows[y]) & ~(xbit | ybit)
        elif row & ybit:
            row = (row & ~ybit) | xbit
        new_rows.append(_squeeze(row, y))
    fwd = tuple(x if u == y else (u - 1 if u > y else u) for u in range(g.n))
    return ContractionResult(Graph(new_rows), x, fwd)


@dataclass(frozen=True)
class ChainStep:
    step: int
    graph6: str
    wse: int
    edge: Edge | None  # edge of the previous graph contracted to reach this one


def _pick_edge(g: Graph, strategy: str, rng: SplitMix64 | None) -> Edge:
    edges = g.edges()
    if strategy == "first-edge":
        return edges[0]
    if strategy == "random":
        assert rng is not None
        return edges[rng.below(len(edges))]
    # max-degree: highest-degree vertex (lowest index on ties), joined to its
    # highest-degree neighbour (lowest index on ties).
    degs = g.degrees()
    v = max(range(g.n), key=lambda u: (degs[u], -u))
    w = max(g.neighbors(v), key=lambda u: (degs[u], -u))
    return Edge(v, w)


def contract_chain(g: Graph, strategy: str = "first-edge", seed: int = 0) -> list[ChainStep]:
    """Contract edges one at a time until two vertices remain, recording
    ``W - eps`` at every step.

    ``seed`` only matters for the ``random`` strategy.
    """
    if strategy not in STRATEGIES:
        raise GraphError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if g.n < 2:
        raise TooSmall("chains start from at least two vertices")
    if not is_connected(g):
        raise Disconnected("contraction chains need a connected graph")
    rng = SplitMix64(seed) if strategy == "random" else None
    steps = [ChainStep(0, write_graph6(g), invariant_summary(g).wse, None)]
    while g.n > 2:
        e = _pick_edge(g, strategy, rng)
        g = contract_edge(g, e).contracted
        steps.append(ChainStep(len(steps), write_graph6(g), invariant_summary(g).wse, e))
    return steps


def first_increase(steps: list[ChainStep]) -> int | None:
    """Index of the first step whose ``wse`` exceeds its predecessor's."""
    for k in range(1, len(steps)):
        if steps[k].wse > steps[k - 1].wse:
            return k
    return None
