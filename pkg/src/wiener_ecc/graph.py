"""Simple undirected graphs stored as adjacency bitrows, plus graph6 and
edge-list codecs.

Row ``u`` of a :class:`Graph` is a Python int whose bit ``v`` is set iff
``u`` and ``v`` are adjacent.  Graphs are immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import (
    EdgeListError,
    EmptyGraph,
    EndpointOutOfRange,
    Graph6Error,
    GraphError,
    GraphTooLarge,
    IllegalCharacter,
    LoopEdge,
    MalformedHeader,
    TruncatedBits,
    VertexOutOfRange,
)

#: Largest vertex count the library accepts.  Bitrows are arbitrary-precision
#: ints, so this is a sanity cap rather than a storage limit.
MAX_VERTICES = 4096

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True, order=True)
class Edge:
    """Unordered edge; endpoints are stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise LoopEdge(f"loop at vertex {self.a}")
        if self.a < 0 or self.b < 0:
            raise EndpointOutOfRange(f"negative endpoint in ({self.a}, {self.b})")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[int]):
        rows = tuple(rows)
        n = len(rows)
        if n > MAX_VERTICES:
            raise GraphTooLarge(f"{n} vertices exceeds ceiling {MAX_VERTICES}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise EndpointOutOfRange(f"row {u} references a vertex >= {n}")
            if row >> u & 1:
                raise LoopEdge(f"loop at vertex {u}")
            for v in _bits(row):
                if not rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self._rows = rows
        self._hash = None

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._rows]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(_bits(self._rows[v]))

    def edges(self) -> list[Edge]:
        """All edges sorted lexicographically by ``(a, b)``."""
        return [
            Edge(u, v)
            for u, row in enumerate(self._rows)
            for v in _bits(row >> (u + 1) << (u + 1))
        ]

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        rows = [0] * n
        for u, row in enumerate(self._rows):
            r = 0
            for v in _bits(row):
                r |= 1 << perm[v]
            rows[perm[u]] = r
        return Graph(rows)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._rows):
            raise VertexOutOfRange(f"vertex {v} not in [0, {len(self._rows)})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        if self.n == 0:
            return "Graph(n=0)"
        return f"Graph(n={self.n}, m={self.m}, graph6={write_graph6(self)!r})"


def from_edge_list(n: int, edges: Iterable[Edge | tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse silently."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise GraphTooLarge(f"{n} vertices exceeds ceiling {MAX_VERTICES}")
    rows = [0] * n
    for a, b in edges:
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise EndpointOutOfRange(f"edge ({a}, {b}) outside [0, {n})")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(rows)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(full ^ (1 << u) for u in range(n))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise EmptyGraph("connectivity of the empty graph is undefined")
    rows = g.rows
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_path_graph(g: Graph) -> bool:
    n = g.n
    if n <= 2:
        return n >= 1 and g.m == n - 1
    degs = g.degrees()
    return (
        g.m == n - 1
        and degs.count(1) == 2
        and degs.count(2) == n - 2
        and is_connected(g)
    )


# -- graph6 ---------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphTooLarge(f"{n} vertices cannot be encoded in graph6")


def _decode_size(data: str) -> tuple[int, int]:
    """Return ``(n, number of header characters consumed)``."""
    if not data:
        raise MalformedHeader("empty graph6 value")
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start : start + width]
    if len(chunk) < width:
        raise MalformedHeader("truncated extended size field")
    n = 0
    for ch in chunk:
        n = (n << 6) | (ord(ch) - 63)
    if width == 3 and n > 258047:
        raise MalformedHeader(f"size {n} out of range for the 4-byte form")
    # Extended forms must not encode sizes the shorter forms cover.
    if (width == 3 and n <= 62) or (width == 6 and n <= 258047):
        raise MalformedHeader(f"non-minimal size encoding for n={n}")
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header, trailing
    newline tolerated)."""
    line = text.rstrip("\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise IllegalCharacter(f"character {ch!r} at offset {pos}")
    n, used = _decode_size(line)
    if n == 0:
        raise MalformedHeader("graph6 value encodes the empty graph")
    if n > MAX_VERTICES:
        raise GraphTooLarge(f"{n} vertices exceeds ceiling {MAX_VERTICES}")
    body = line[used:]
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    if len(body) < nchars:
        raise TruncatedBits(f"expected {nchars} data characters, got {len(body)}")
    if len(body) > nchars:
        raise Graph6Error(f"expected {nchars} data characters, got {len(body)}")
    value = 0
    for ch in body:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * nchars - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    value >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(rows)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n == 0:
        raise EmptyGraph("graph6 cannot encode the empty graph")
    rows = g.rows
    value = 0
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            value = (value << 1) | (col >> i & 1)
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    value <<= 6 * nchars - nbits
    body = "".join(chr(63 + (value >> (6 * k) & 63)) for k in range(nchars - 1, -1, -1))
    return _encode_size(n) + body


# -- edge list --------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``a b``; ``#`` starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise EdgeListError("missing 'n m' header line")
    lineno, head = lines[0]
    try:
        n, m = (int(tok) for tok in head)
    except ValueError:
        raise EdgeListError(f"line {lineno}: expected 'n m'") from None
    if len(lines) - 1 != m:
        raise EdgeListError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, toks in lines[1:]:
        try:
            a, b = (int(tok) for tok in toks)
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected 'a b'") from None
        edges.append((a, b))
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{e.a} {e.b}" for e in edges)
    return "\n".join(out) + "\n"
