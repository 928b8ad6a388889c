"""Instance checkers for the contraction inequality ``W(G.e) - eps(G.e) <=
W(G) - eps(G)``, the distance and eccentricity lemmas behind it, its
per-vertex decomposition, and the open path bound for radius >= 4.

Per-vertex quantities ``1/2 * sum_v d(u, v) - max_v d(u, v)`` are handled
doubled (``sum_v d(u, v) - 2 * max_v d(u, v)``) so every comparison is an
integer comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .contraction import ContractionResult, contract_edge
from .errors import Disconnected, NotAnEdge, TooSmall
from .graph import Edge, Graph, is_connected, is_path_graph, write_graph6
from .metrics import DistanceMatrix, all_pairs_distances, summarize

LEMMA_IDS = ("D1", "D2", "E1", "E2", "Conj0", "Conj1")


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    graph_id: str
    edge: Edge
    holds: bool
    witness: str | None = None

    def __post_init__(self) -> None:
        if not self.holds and self.witness is None:
            raise ValueError("a failing report must carry a witness")


@dataclass(frozen=True)
class VerificationRecord:
    graph_id: str
    edge: Edge
    wse_before: int
    wse_after: int

    @property
    def delta(self) -> int:
        return self.wse_before - self.wse_after

    @property
    def passed(self) -> bool:
        return self.delta >= 0


@dataclass(frozen=True)
class Conjecture2Record:
    graph_id: str
    n: int
    radius: int
    wse: int
    bound: int
    is_path: bool

    @property
    def within_bound(self) -> bool:
        return self.wse <= self.bound

    @property
    def equality(self) -> bool:
        return self.wse == self.bound

    @property
    def finding(self) -> bool:
        """True when the record contradicts the open conjecture."""
        return not self.within_bound or self.equality != self.is_path


def _contribution(row: tuple[int, ...]) -> int:
    return sum(row) - 2 * max(row)


class ContractionCase:
    """One ``(G, e)`` pair with both distance matrices computed once.

    Pass ``dist`` to reuse the matrix of ``g`` across its edges; it must be
    ``all_pairs_distances(g)``.
    """

    def __init__(self, g: Graph, e: Edge | tuple[int, int], dist: DistanceMatrix | None = None,
                 graph_id: str | None = None):
        if not isinstance(e, Edge):
            e = Edge(*e)
        if g.n < 3:
            raise TooSmall("the contraction inequality needs at least three vertices")
        if e.b >= g.n or not g.rows[e.a] >> e.b & 1:
            raise NotAnEdge(f"{e} is not an edge")
        if dist is None:
            if not is_connected(g):
                raise Disconnected("graph is not connected")
            dist = all_pairs_distances(g)
        self.g = g
        self.edge = e
        self.dg = dist
        self.result: ContractionResult = contract_edge(g, e)
        self.dh = all_pairs_distances(self.result.contracted)
        self._graph_id = graph_id

    @property
    def graph_id(self) -> str:
        if self._graph_id is None:
            self._graph_id = write_graph6(self.g)
        return self._graph_id

    @cached_property
    def survivors(self) -> list[int]:
        x, y = self.edge
        return [u for u in range(self.g.n) if u != x and u != y]

    def _report(self, lemma_id: str, witness: str | None) -> LemmaReport:
        return LemmaReport(lemma_id, self.graph_id, self.edge, witness is None, witness)

    def distance_drop_pairs(self) -> LemmaReport:
        """Distances between surviving vertices shrink by at most one."""
        dg, dh, f = self.dg.rows, self.dh.rows, self.result.fwd_map
        surv = self.survivors
        for i, u in enumerate(surv):
            gu, hu = dg[u], dh[f[u]]
            for v in surv[i + 1 :]:
                drop = gu[v] - hu[f[v]]
                if drop != 0 and drop != 1:
                    return self._report(
                        "D1", f"u={u} v={v} d_G={gu[v]} d_G.e={hu[f[v]]}"
                    )
        return self._report("D1", None)

    def distance_drop_alpha(self) -> LemmaReport:
        """Distance to the merged vertex is d(u, x) or one less, and the same
        for y."""
        x, y = self.edge
        dg, dh, f, alpha = self.dg.rows, self.dh.rows, self.result.fwd_map, self.result.alpha
        for u in self.survivors:
            to_alpha = dh[f[u]][alpha]
            for end in (x, y):
                drop = dg[u][end] - to_alpha
                if drop != 0 and drop != 1:
                    return self._report(
                        "D2", f"u={u} end={end} d_G={dg[u][end]} d_G.e(alpha)={to_alpha}"
                    )
        return self._report("D2", None)

    def merged_eccentric(self) -> LemmaReport:
        """If the farthest vertices of u all lie in {x, y}, the merged vertex
        is farthest from u after contraction."""
        x, y = self.edge
        dg, dh, f, alpha = self.dg.rows, self.dh.rows, self.result.fwd_map, self.result.alpha
        for u in self.survivors:
            row = dg[u]
            top = max(row)
            if any(d == top for v, d in enumerate(row) if v != x and v != y):
                continue
            hrow = dh[f[u]]
            if hrow[alpha] != max(hrow):
                return self._report(
                    "E1", f"u={u} ecc_G={top} d_G.e(alpha)={hrow[alpha]} ecc_G.e={max(hrow)}"
                )
        return self._report("E1", None)

    def common_eccentric(self) -> LemmaReport:
        """If u has a farthest vertex outside {x, y}, one of those stays
        farthest after contraction."""
        x, y = self.edge
        dg, dh, f = self.dg.rows, self.dh.rows, self.result.fwd_map
        for u in self.survivors:
            row = dg[u]
            top = max(row)
            outside = [w for w, d in enumerate(row) if d == top and w != x and w != y]
            if not outside:
                continue
            hrow = dh[f[u]]
            htop = max(hrow)
            if not any(hrow[f[w]] == htop for w in outside):
                return self._report(
                    "E2", f"u={u} eccentric_G={outside} ecc_G.e={htop}"
                )
        return self._report("E2", None)

    @cached_property
    def pointwise_terms(self) -> tuple[list[int], int]:
        """Doubled per-vertex slack: one entry per survivor (G side minus G.e
        side), and the merged-pair slack."""
        x, y = self.edge
        dg, dh, f, alpha = self.dg.rows, self.dh.rows, self.result.fwd_map, self.result.alpha
        common = [_contribution(dg[u]) - _contribution(dh[f[u]]) for u in self.survivors]
        merged = _contribution(dg[x]) + _contribution(dg[y]) - _contribution(dh[alpha])
        return common, merged

    def pointwise_common(self) -> LemmaReport:
        common, _ = self.pointwise_terms
        for u, slack in zip(self.survivors, common):
            if slack < 0:
                return self._report("Conj0", f"u={u} doubled_slack={slack}")
        return self._report("Conj0", None)

    def pointwise_merged(self) -> LemmaReport:
        _, merged = self.pointwise_terms
        if merged < 0:
            return self._report("Conj1", f"doubled_slack={merged}")
        return self._report("Conj1", None)

    def lemma_reports(self) -> list[LemmaReport]:
        return [
            self.distance_drop_pairs(),
            self.distance_drop_alpha(),
            self.merged_eccentric(),
            self.common_eccentric(),
            self.pointwise_common(),
            self.pointwise_merged(),
        ]

    def inequality(self) -> VerificationRecord:
        return VerificationRecord(
            self.graph_id,
            self.edge,
            summarize(self.dg).wse,
            summarize(self.dh).wse,
        )


def cases(g: Graph) -> list[ContractionCase]:
    """One case per edge of ``g`` (lexicographic edge order), sharing the
    distance matrix of ``g``."""
    if g.n < 3:
        raise TooSmall("the contraction inequality needs at least three vertices")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    dist = all_pairs_distances(g)
    gid = write_graph6(g)
    return [ContractionCase(g, e, dist, gid) for e in g.edges()]


def check_distance_drop_pairs(g: Graph, e: Edge | tuple[int, int]) -> LemmaReport:
    return ContractionCase(g, e).distance_drop_pairs()


def check_distance_drop_alpha(g: Graph, e: Edge | tuple[int, int]) -> LemmaReport:
    return ContractionCase(g, e).distance_drop_alpha()


def check_merged_eccentric(g: Graph, e: Edge | tuple[int, int]) -> LemmaReport:
    return ContractionCase(g, e).merged_eccentric()


def check_common_eccentric(g: Graph, e: Edge | tuple[int, int]) -> LemmaReport:
    return ContractionCase(g, e).common_eccentric()


def check_pointwise_common(g: Graph, e: Edge | tuple[int, int]) -> LemmaReport:
    return ContractionCase(g, e).pointwise_common()


def check_pointwise_merged(g: Graph, e: Edge | tuple[int, int]) -> LemmaReport:
    return ContractionCase(g, e).pointwise_merged()


def check_contraction_inequality(g: Graph, e: Edge | tuple[int, int]) -> VerificationRecord:
    return ContractionCase(g, e).inequality()


def conjecture2_bound(n: int) -> int:
    """floor(n^3/6 - 3n^2/4 + n/3 + 1/4), computed over the common
    denominator 12."""
    if n < 1:
        raise ValueError("order must be positive")
    return (2 * n**3 - 9 * n**2 + 4 * n + 3) // 12


def check_conjecture2(g: Graph) -> Conjecture2Record | None:
    """Record for graphs of radius at least 4, ``None`` otherwise.

    The bound is an open conjecture: a record with ``finding`` set is a
    counterexample candidate to report, not an error.
    """
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    s = summarize(all_pairs_distances(g))
    if s.radius < 4:
        return None
    return Conjecture2Record(
        graph_id=write_graph6(g),
        n=g.n,
        radius=s.radius,
        wse=s.wse,
        bound=conjecture2_bound(g.n),
        is_path=is_path_graph(g),
    )
