"""Graph sources: isomorphism-reduced enumeration, graph6 streams and seeded
random generators.

Canonical forms are the minimum graph6-order adjacency bitstring over the
labelings reached by colour refinement plus individualisation.  Cells are
ordered by refined colour, which is itself labeling-invariant, so the
minimum is an isomorphism invariant without trying all ``n!``
permutations.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from functools import lru_cache
import heapq

from .errors import Graph6Error, GraphError, RangeUnsupported, RetriesExhausted
from .graph import Graph, _bits, is_connected, parse_graph6
from .rng import SplitMix64

log = logging.getLogger(__name__)

CANONICAL_MAX_N = 12
ENUMERATE_MAX_N = 8
LABELED_MAX_N = 7
MIN_RADIUS_MAX_N = 10
MAX_RESAMPLES = 10_000


# -- canonical form -----------------------------------------------------------


def _refine(rows: tuple[int, ...], colors: list[int]) -> list[int]:
    ncells = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in _bits(rows[v]))))
            for v in range(len(rows))
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        if len(order) == ncells:
            return colors
        ncells = len(order)


def _code(rows: tuple[int, ...], labels: list[int]) -> int:
    n = len(rows)
    inv = [0] * n
    for v, lab in enumerate(labels):
        inv[lab] = v
    value = 0
    for j in range(1, n):
        row = rows[inv[j]]
        for i in range(j):
            value = (value << 1) | (row >> inv[i] & 1)
    return value


def _min_code(rows: tuple[int, ...], colors: list[int]) -> int:
    colors = _refine(rows, colors)
    n = len(rows)
    if len(set(colors)) == n:
        return _code(rows, colors)
    sizes = [0] * n
    for c in colors:
        sizes[c] += 1
    target = next(c for c in range(n) if sizes[c] > 1)
    cell = [v for v in range(n) if colors[v] == target]
    best = None
    tried: list[int] = []
    for v in cell:
        # Swapping twins is an automorphism fixing everything individualised
        # so far, so a twin of an explored vertex yields the same subtree.
        if any(rows[v] & ~(1 << w) == rows[w] & ~(1 << v) for w in tried):
            continue
        tried.append(v)
        split = [2 * c + (c == target and w != v) for w, c in enumerate(colors)]
        code = _min_code(rows, split)
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: Graph) -> bytes:
    """Fixed-length isomorphism-invariant key: one byte of ``n`` followed
    by the minimal bitstring, big-endian."""
    n = g.n
    if not 1 <= n <= CANONICAL_MAX_N:
        raise RangeUnsupported(f"canonical forms support 1 <= n <= {CANONICAL_MAX_N}")
    code = _min_code(g.rows, g.degrees())
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes(-(-nbits // 8) or 1, "big")


def canonical_graph(g: Graph) -> Graph:
    """The graph whose graph6 bitstring is the canonical code."""
    form = canonical_form(g)
    n = form[0]
    code = int.from_bytes(form[1:], "big")
    rows = [0] * n
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(rows)


# -- exhaustive enumeration ---------------------------------------------------


def _dedup(candidates: Iterable[Graph]) -> tuple[Graph, ...]:
    """Keep the first candidate per isomorphism class; sort by canonical form."""
    seen: dict[bytes, Graph] = {}
    for g in candidates:
        seen.setdefault(canonical_form(g), g)
    return tuple(seen[k] for k in sorted(seen))


def _one_vertex_extensions(parent: Graph) -> Iterator[Graph]:
    """Add vertex ``n`` joined to every non-empty subset of the old vertices,
    subsets ordered by their graph6 column pattern."""
    m = parent.n
    rows = parent.rows
    for pattern in range(1, 1 << m):
        nbrs = 0
        new_rows = list(rows)
        for i in range(m):
            if pattern >> (m - 1 - i) & 1:
                nbrs |= 1 << i
                new_rows[i] |= 1 << m
        new_rows.append(nbrs)
        yield Graph(new_rows)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph([0]),)
    # Every connected graph has a vertex whose removal leaves it connected.
    return _dedup(
        child for parent in _connected_classes(n - 1) for child in _one_vertex_extensions(parent)
    )


def _labeled_connected(n: int) -> Iterator[Graph]:
    nbits = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for value in range(1 << nbits):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if value >> (nbits - 1 - k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(rows)
        if is_connected(g):
            yield g


def enumerate_connected(n: int, dedup: bool = True) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices.

    With ``dedup`` one representative per isomorphism class is emitted, in
    canonical-form order.  Without it every labeled graph is emitted, in
    increasing order of its graph6 bitstring.
    """
    if dedup:
        if not 1 <= n <= ENUMERATE_MAX_N:
            raise RangeUnsupported(f"isomorphism-reduced enumeration supports 1 <= n <= {ENUMERATE_MAX_N}")
        return iter(_connected_classes(n))
    if not 1 <= n <= LABELED_MAX_N:
        raise RangeUnsupported(f"labeled enumeration supports 1 <= n <= {LABELED_MAX_N}")
    return _labeled_connected(n)


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph([0]),)
    children = []
    for parent in _tree_classes(n - 1):
        for v in range(n - 1):
            rows = list(parent.rows)
            rows[v] |= 1 << (n - 1)
            rows.append(1 << v)
            children.append(Graph(rows))
    return _dedup(children)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One labeled representative of every unlabeled tree on ``n`` vertices."""
    if not 1 <= n <= CANONICAL_MAX_N:
        raise RangeUnsupported(f"tree enumeration supports 1 <= n <= {CANONICAL_MAX_N}")
    return iter(_tree_classes(n))


def _radius_at_least(rows: list[int], r: int) -> bool:
    n = len(rows)
    full = (1 << n) - 1
    for s in range(n):
        ball = frontier = 1 << s
        for _ in range(r - 1):
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~ball
            ball |= frontier
        if ball == full:
            return False
    return True


def enumerate_min_radius(n: int, r: int = 4) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices with radius at least ``r``,
    one per isomorphism class, in canonical-form order.

    Any spanning tree of such a graph also has radius >= r, and adding edges
    never raises the radius, so the search grows each tree class by
    non-edges and prunes as soon as the radius drops below ``r``.
    """
    if not 1 <= n <= MIN_RADIUS_MAX_N:
        raise RangeUnsupported(f"radius-filtered enumeration supports 1 <= n <= {MIN_RADIUS_MAX_N}")
    if r < 1:
        return enumerate_connected(n) if n <= ENUMERATE_MAX_N else iter(())

    found: list[Graph] = []

    def grow(rows: list[int], nonedges: list[tuple[int, int]], start: int) -> None:
        found.append(Graph(rows))
        for k in range(start, len(nonedges)):
            i, j = nonedges[k]
            nxt = list(rows)
            nxt[i] |= 1 << j
            nxt[j] |= 1 << i
            if _radius_at_least(nxt, r):
                grow(nxt, nonedges, k + 1)

    for tree in _tree_classes(n):
        rows = list(tree.rows)
        if not _radius_at_least(rows, r):
            continue
        nonedges = [(i, j) for j in range(1, n) for i in range(j) if not rows[i] >> j & 1]
        grow(rows, nonedges, 0)
    return iter(_dedup(found))


# -- random generators ---------------------------------------------------------


def sample_gnp(n: int, p_numerator: int, p_denominator: int, rng: SplitMix64) -> Graph:
    """One G(n, p) draw, pairs visited in graph6 order; may be disconnected."""
    if n < 1:
        raise GraphError("n must be at least 1")
    if not 0 < p_numerator <= p_denominator:
        raise GraphError("edge probability must satisfy 0 < p <= 1")
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.bernoulli(p_numerator, p_denominator):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(rows)


def sample_connected_gnp(n: int, p_numerator: int, p_denominator: int, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by rejection; the same generator
    stream continues across resamples."""
    rng = SplitMix64(seed)
    for _ in range(MAX_RESAMPLES):
        g = sample_gnp(n, p_numerator, p_denominator, rng)
        if is_connected(g):
            return g
    raise RetriesExhausted(
        f"no connected G({n}, {p_numerator}/{p_denominator}) sample in {MAX_RESAMPLES} draws"
    )


def prufer_decode(seq: list[int] | tuple[int, ...], n: int) -> Graph:
    if n < 1:
        raise GraphError("n must be at least 1")
    if len(seq) != max(n - 2, 0) or any(not 0 <= s < n for s in seq):
        raise GraphError(f"not a Prufer sequence for n={n}")
    if n <= 2:
        return Graph([0]) if n == 1 else Graph([2, 1])
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    rows = [0] * n
    for s in seq:
        leaf = heapq.heappop(leaves)
        rows[leaf] |= 1 << s
        rows[s] |= 1 << leaf
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(rows)


def sample_random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree: decode ``n - 2`` uniform draws from ``[0, n)``."""
    rng = SplitMix64(seed)
    return prufer_decode([rng.below(n) for _ in range(n - 2)], n)


# -- graph6 streams ------------------------------------------------------------


class StreamParseError(Graph6Error):
    def __init__(self, lineno: int, cause: Exception):
        super().__init__(f"line {lineno}: {cause}")
        self.lineno = lineno
        self.cause = cause


def read_graph6_stream(
    source: Iterable[str], skip_errors: bool = False, diagnostics: list[str] | None = None
) -> Iterator[tuple[int, Graph]]:
    """Lazily yield ``(line number, graph)`` for each non-blank line.

    Malformed lines raise :class:`StreamParseError`, or with ``skip_errors``
    are logged, appended to ``diagnostics`` and skipped.
    """
    for lineno, line in enumerate(source, 1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line.strip())
        except GraphError as exc:
            err = StreamParseError(lineno, exc)
            if not skip_errors:
                raise err from exc
            log.warning("%s", err)
            if diagnostics is not None:
                diagnostics.append(str(err))
            continue
        yield lineno, g
