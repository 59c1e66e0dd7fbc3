"""Constructors for the named graph families and small-graph corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, GraphError, build_graph, complement
from .iso import canonical_code, canonical_form

MAX_ENUMERATION_N = 8


def gen_hole(k: int) -> Graph:
    """The chordless cycle C_k."""
    if k < 4:
        raise GraphError(f"holes need at least 4 vertices, got {k}")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def gen_antihole(k: int) -> Graph:
    return complement(gen_hole(k))


def gen_path(k: int) -> Graph:
    """Path on ``k`` vertices 0-1-...-(k-1)."""
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def gen_complete(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def gen_complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


def gen_prism(l1: int, l2: int, l3: int) -> Graph:
    """Two triangles a_1a_2a_3, b_1b_2b_3 joined by induced a_i..b_i paths.

    ``l_i`` is the edge length of the i-th path. Triangle vertices come first
    (a_1, a_2, a_3, b_1, b_2, b_3), then the interior vertices path by path.
    """
    lengths = (l1, l2, l3)
    if any(l < 1 for l in lengths):
        raise GraphError(f"prism path lengths must be >= 1, got {lengths}")
    n = 6 + sum(l - 1 for l in lengths)
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for i, l in enumerate(lengths):
        prev = i
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 3 + i))
    return build_graph(n, edges)


@dataclass(frozen=True)
class DoubleSplitSpec:
    """Parameters of a double split graph.

    ``orientation[i][j]`` True means edges a_i c_j and b_i d_j; False means
    a_i d_j and b_i c_j.
    """

    m: int
    n: int
    orientation: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise GraphError(f"double split graphs need m, n >= 2 (got m={self.m}, n={self.n})")
        if len(self.orientation) != self.m or any(len(r) != self.n for r in self.orientation):
            raise GraphError("orientation must be an m x n matrix")

    @classmethod
    def straight(cls, m: int, n: int) -> "DoubleSplitSpec":
        return cls(m, n, tuple((True,) * n for _ in range(m)))

    @classmethod
    def from_bits(cls, m: int, n: int, word: int) -> "DoubleSplitSpec":
        """Orientation from the bits of ``word``, row-major, bit 0 = (0, 0)."""
        return cls(m, n, tuple(tuple(bool(word >> (i * n + j) & 1) for j in range(n)) for i in range(m)))

    def normalized(self) -> "DoubleSplitSpec":
        # swapping c_j with d_j flips column j
        flip = [not self.orientation[0][j] for j in range(self.n)]
        return DoubleSplitSpec(
            self.m, self.n, tuple(tuple(o != f for o, f in zip(row, flip)) for row in self.orientation)
        )


def double_split_layout(m: int, n: int) -> dict[str, list[int]]:
    """Vertex indices of a_1..a_m, b_1..b_m, c_1..c_n, d_1..d_n."""
    return {
        "a": list(range(m)),
        "b": list(range(m, 2 * m)),
        "c": list(range(2 * m, 2 * m + n)),
        "d": list(range(2 * m + n, 2 * m + 2 * n)),
    }


def gen_double_split(spec: DoubleSplitSpec) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Build the double split graph after relabelling so a_1 sees every c_j.

    Returns ``(G, K_a, K_b)`` with K_a = {a_1, c_1..c_n}, K_b = {b_1, d_1..d_n}.
    """
    spec = spec.normalized()
    m, n = spec.m, spec.n
    lay = double_split_layout(m, n)
    a, b, c, d = lay["a"], lay["b"], lay["c"], lay["d"]
    edges = [(a[i], b[i]) for i in range(m)]
    for j in range(n):
        for k in range(j + 1, n):
            edges += [(c[j], c[k]), (c[j], d[k]), (d[j], c[k]), (d[j], d[k])]
    for i in range(m):
        for j in range(n):
            if spec.orientation[i][j]:
                edges += [(a[i], c[j]), (b[i], d[j])]
            else:
                edges += [(a[i], d[j]), (b[i], c[j])]
    g = build_graph(2 * m + 2 * n, edges)
    return g, tuple([a[0]] + c), tuple([b[0]] + d)


def all_double_split_specs(m: int, n: int) -> Iterator[DoubleSplitSpec]:
    for word in range(1 << (m * n)):
        yield DoubleSplitSpec.from_bits(m, n, word)


def gen_random_bipartite(a: int, b: int, edge_prob: float, seed: int) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Random bipartite graph with sides 0..a-1 and a..a+b-1.

    Uses the stdlib Mersenne Twister (MT19937) seeded with ``seed``; pair
    (i, j) is drawn in row-major order and kept when the draw is below
    ``edge_prob``.
    """
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < edge_prob]
    return build_graph(a + b, edges), tuple(range(a)), tuple(range(a, a + b))


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labelled graphs on n vertices (graph6 bit order)."""
    if n > MAX_ENUMERATION_N:
        raise GraphError(f"enumeration is limited to n <= {MAX_ENUMERATION_N}")
    slots = _edge_slots(n)
    for word in range(1 << len(slots)):
        rows = [0] * n
        k = word
        idx = 0
        while k:
            if k & 1:
                i, j = slots[idx]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k >>= 1
            idx += 1
        yield Graph._trusted(n, rows)


_CLASS_CACHE: dict[tuple[int, object], list[Graph]] = {}


def isomorphism_classes(n: int, keep: Callable[[Graph], bool] | None = None) -> list[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Built by vertex augmentation from the classes on n-1 vertices. ``keep``
    must be a hereditary predicate (closed under vertex deletion); classes
    failing it are pruned at every level.
    """
    if n > MAX_ENUMERATION_N:
        raise GraphError(f"enumeration is limited to n <= {MAX_ENUMERATION_N}")
    key = (n, keep)
    if key in _CLASS_CACHE:
        return _CLASS_CACHE[key]
    if n == 0:
        reps = [Graph._trusted(0, [])]
    else:
        seen: dict[tuple[int, int], Graph] = {}
        for base in isomorphism_classes(n - 1, keep):
            for nbrs in range(1 << (n - 1)):
                rows = [r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(base.rows)]
                rows.append(nbrs)
                g = Graph._trusted(n, rows)
                if keep is not None and not keep(g):
                    continue
                code = canonical_code(g)
                if code not in seen:
                    seen[code] = canonical_form(g)
        reps = [seen[c] for c in sorted(seen)]
    _CLASS_CACHE[key] = reps
    return reps


def enumerate_graphs(n: int, unique: bool = False) -> Iterator[Graph]:
    """Stream every graph on n vertices, or one per isomorphism class."""
    if n > MAX_ENUMERATION_N:
        raise GraphError(f"enumeration is limited to n <= {MAX_ENUMERATION_N}")
    if unique:
        yield from isomorphism_classes(n)
    else:
        yield from enumerate_labeled(n)


def corpus(n_max: int, n_min: int = 0, keep: Callable[[Graph], bool] | None = None) -> list[Graph]:
    """Isomorphism-class representatives for every order in n_min..n_max."""
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(isomorphism_classes(n, keep))
    return out
