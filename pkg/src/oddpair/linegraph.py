"""Line graphs, root-graph reconstruction for claw/diamond-free graphs, and
the two-sided partition of maximal cliques for line graphs of bipartite
graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError, build_graph
from .invariants import maximal_cliques
from .iso import find_induced
from .paths import PATH_CAP, PathWitness, Verdict, classify_clique_pair


def line_graph(r: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """L(r) with ``labels[i]`` the edge of ``r`` that became vertex i."""
    labels = r.edges()
    edges = []
    for i, (a, b) in enumerate(labels):
        for j in range(i + 1, len(labels)):
            c, d = labels[j]
            if a == c or a == d or b == c or b == d:
                edges.append((i, j))
    return build_graph(len(labels), edges), labels


CLAW = build_graph(4, [(0, 1), (0, 2), (0, 3)])
DIAMOND = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def is_claw_diamond_free(g: Graph) -> tuple[bool, tuple[str, tuple[int, ...]] | None]:
    """``(True, None)`` or ``(False, (pattern_name, embedding))``."""
    for name, pattern in (("claw", CLAW), ("diamond", DIAMOND)):
        hit = find_induced(g, pattern)
        if hit is not None:
            return False, (name, hit)
    return True, None


class ForbiddenSubgraph(GraphError):
    def __init__(self, name: str, embedding: tuple[int, ...]):
        super().__init__(f"graph contains an induced {name} at {embedding}")
        self.name = name
        self.embedding = embedding


@dataclass(frozen=True)
class RootGraph:
    """A triangle-free R with L(R) isomorphic to the source graph.

    Clique vertices come first, in the order of ``maximal_cliques``; pendant
    vertices follow in source-vertex order. ``edge_of[v]`` is the edge of R
    that represents source vertex v, which is the isomorphism onto L(R).
    """

    graph: Graph
    clique_vertices: tuple[int, ...]
    pendant_vertices: tuple[int, ...]
    clique_map: dict[int, tuple[int, ...]]
    pendant_map: dict[int, int]
    edge_of: dict[int, tuple[int, int]] = field(default_factory=dict)


def root_graph(g: Graph) -> RootGraph:
    ok, hit = is_claw_diamond_free(g)
    if not ok:
        raise ForbiddenSubgraph(*hit)
    cliques = maximal_cliques(g)
    k = len(cliques)
    member: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, c in enumerate(cliques):
        for v in c:
            member[v].append(i)
    edges = []
    edge_of: dict[int, tuple[int, int]] = {}
    pendant_map: dict[int, int] = {}
    nxt = k
    for v in range(g.n):
        owners = member[v]
        if len(owners) == 2:
            edge_of[v] = (owners[0], owners[1])
        elif len(owners) == 1:
            pendant_map[nxt] = v
            edge_of[v] = (owners[0], nxt)
            nxt += 1
        else:
            raise AssertionError(f"vertex {v} lies in {len(owners)} maximal cliques of a claw/diamond-free graph")
        edges.append(edge_of[v])
    # intersecting cliques meet in exactly one vertex, so the clique-clique
    # edges are exactly the two-owner vertices above
    r = build_graph(nxt, edges)
    if r.edge_count() != g.n:
        raise AssertionError("two source vertices mapped to the same root edge")
    for u, v in combinations(range(g.n), 2):
        shares = bool(set(edge_of[u]) & set(edge_of[v]))
        if shares != g.has_edge(u, v):
            raise AssertionError(f"root graph does not reproduce adjacency of {u}, {v}")
    return RootGraph(
        graph=r,
        clique_vertices=tuple(range(k)),
        pendant_vertices=tuple(range(k, nxt)),
        clique_map={i: c for i, c in enumerate(cliques)},
        pendant_map=pendant_map,
        edge_of=edge_of,
    )


def _two_coloring(r: Graph) -> list[int] | None:
    side = [-1] * r.n
    for s in range(r.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in r.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def shortest_odd_cycle(r: Graph) -> list[int] | None:
    """A shortest odd cycle of ``r`` (hence chordless), or None if bipartite."""
    best: list[int] | None = None
    for s in range(r.n):
        dist = [-1] * r.n
        parent = [-1] * r.n
        dist[s] = 0
        queue = deque([s])
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in r.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        for u in order:
            for w in r.neighbors(u):
                if u < w and dist[u] == dist[w]:
                    length = 2 * dist[u] + 1
                    if best is not None and length >= len(best):
                        continue
                    left, right = [u], [w]
                    while left[-1] != s:
                        left.append(parent[left[-1]])
                    while right[-1] != s:
                        right.append(parent[right[-1]])
                    cycle = left[::-1] + right[:-1]
                    if len(set(cycle)) == length:
                        best = cycle
    return best


@dataclass(frozen=True)
class CliqueBipartition:
    side_a: tuple[tuple[int, ...], ...]
    side_b: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OddCliqueCycle:
    """Failure witness: consecutive cliques intersect, and there are an odd
    number of them."""

    cliques: tuple[tuple[int, ...], ...]


def clique_bipartition(g: Graph) -> CliqueBipartition | OddCliqueCycle:
    root = root_graph(g)
    side = _two_coloring(root.graph)
    if side is None:
        cycle = shortest_odd_cycle(root.graph)
        return OddCliqueCycle(tuple(root.clique_map[v] for v in cycle))
    a = tuple(root.clique_map[v] for v in root.clique_vertices if side[v] == 0)
    b = tuple(root.clique_map[v] for v in root.clique_vertices if side[v] == 1)
    return CliqueBipartition(a, b)


@dataclass(frozen=True)
class BipartitionViolation:
    k1: tuple[int, ...]
    k2: tuple[int, ...]
    same_side: bool
    verdict: Verdict
    witness: PathWitness | None


@dataclass
class BipartitionReport:
    pairs_checked: int = 0
    violations: list[BipartitionViolation] = field(default_factory=list)
    missing_cliques: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.missing_cliques


def verify_bipartition(g: Graph, part: CliqueBipartition, cap: int = PATH_CAP) -> BipartitionReport:
    """Check same-side pairs are odd pairs and cross pairs are even pairs."""
    report = BipartitionReport()
    side = {}
    for c in part.side_a:
        side[tuple(c)] = 0
    for c in part.side_b:
        side[tuple(c)] = 1
    cliques = maximal_cliques(g)
    report.missing_cliques = [c for c in cliques if c not in side]
    listed = [c for c in side]
    for k1, k2 in combinations(listed, 2):
        report.pairs_checked += 1
        cls = classify_clique_pair(g, k1, k2, cap)
        same = side[k1] == side[k2]
        allowed = cls.is_odd_literal() if same else cls.is_even_literal()
        if not allowed:
            witness = cls.even_witness if same else cls.odd_witness
            report.violations.append(BipartitionViolation(k1, k2, same, cls.verdict, witness))
    return report
