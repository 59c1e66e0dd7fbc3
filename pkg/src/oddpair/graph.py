"""Immutable simple graphs on dense vertex labels 0..n-1.

Adjacency is stored as one integer bitmask per vertex, which keeps subset
arithmetic cheap for the exhaustive searches done elsewhere in the package.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, bad graph6)."""


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; every operation returns a new
    graph.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_hash", hash((n, self.rows)))

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        # skips validation; callers guarantee symmetric loopless rows
        g = object.__new__(cls)
        rows = tuple(rows)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_hash", hash((n, rows)))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all((self.rows[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(self.rows[v] & mask == 0 for v in bits(mask))

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within`` (a mask)."""
        remaining = self.vertex_mask if within is None else within
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.rows[v]
                nxt &= remaining & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered vertex pairs."""
    rows = [0] * n
    for edge in edges:
        u, v = edge
        if u == v:
            raise GraphError(f"self-loop {edge!r} not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {edge!r} has an endpoint outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(H, mapping)`` where ``mapping[i]`` is the vertex of ``g``
    that became vertex ``i`` of ``H``. Vertex order is preserved."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(keep), rows), keep


def contract_pair(g: Graph, x: int, y: int) -> Graph:
    """The graph G/xy: replace non-adjacent ``x``, ``y`` by one vertex seeing
    N(x) | N(y).

    The merged vertex takes index ``min(x, y)``; vertices above ``max(x, y)``
    shift down by one.
    """
    if x == y:
        raise GraphError("cannot contract a vertex with itself")
    if g.has_edge(x, y):
        raise GraphError(f"vertices {x} and {y} are adjacent; only non-adjacent pairs contract")
    keep, drop = min(x, y), max(x, y)
    merged_row = (g.rows[x] | g.rows[y]) & ~(1 << x | 1 << y)

    def squeeze(mask: int) -> int:
        low = mask & ((1 << drop) - 1)
        return low | (mask >> (drop + 1) << drop)

    rows = []
    for v in range(g.n):
        if v == drop:
            continue
        if v == keep:
            rows.append(squeeze(merged_row))
            continue
        row = g.rows[v] & ~(1 << x | 1 << y)
        if merged_row >> v & 1:
            row |= 1 << keep
        rows.append(squeeze(row))
    return Graph._trusted(g.n - 1, rows)


# graph6 ---------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    out = [_encode_n(g.n)]
    chunk = 0
    count = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(63 + chunk))
                chunk = count = 0
    if count:
        out.append(chr(63 + (chunk << (6 - count))))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    """Parse one graph6 line; an optional ``>>graph6<<`` header is accepted."""
    text = line.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise GraphError("empty graph6 line")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 character {ch!r} at position {pos}")
    data = [ord(ch) - 63 for ch in text]
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphError("truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        body = data[8:]
    else:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise GraphError(f"{kind} graph6 bit field: expected {need} characters, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphError("nonzero padding bits in graph6 line")
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield decode_graph6(line)
