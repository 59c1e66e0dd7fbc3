"""Odd holes and antiholes, the Berge test, prisms, bipartisan graphs and
star cutsets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import Graph, GraphError, bits, build_graph, complement, to_mask
from .invariants import check_cap, is_maximal_clique
from .iso import find_induced
from .linegraph import CLAW, DIAMOND, line_graph
from .paths import PATH_CAP, _iter_paths, classify_clique_pair

HOLE_CAP = 14


@dataclass(frozen=True)
class HoleWitness:
    cycle: tuple[int, ...]
    in_complement: bool = False

    @property
    def length(self) -> int:
        return len(self.cycle)

    def to_json(self) -> dict:
        return {"cycle": list(self.cycle), "length": self.length, "in_complement": self.in_complement}


def is_hole(g: Graph, cycle) -> bool:
    """Chordless cycle on at least four vertices, checked pair by pair."""
    cyc = list(cycle)
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cyc[i], cyc[j]) != consecutive:
                return False
    return True


def _shortest_hole(g: Graph, odd: bool, min_len: int) -> tuple[int, ...] | None:
    rows = g.rows
    best: tuple[int, ...] | None = None

    def better(cyc: tuple[int, ...]) -> bool:
        return best is None or (len(cyc), cyc) < (len(best), best)

    for s in range(g.n):
        allowed = g.vertex_mask & ~((1 << (s + 1)) - 1)
        near_s = rows[s]
        path = [s]

        def extend(last: int, blocked: int) -> None:
            nonlocal best
            limit = len(best) if best is not None else g.n + 1
            if len(path) >= limit:
                return
            for w in bits(rows[last] & allowed & ~blocked):
                if near_s >> w & 1:
                    if len(path) < 3 or w < path[1]:
                        continue
                    cyc = tuple(path) + (w,)
                    if len(cyc) >= min_len and (not odd or len(cyc) % 2) and better(cyc):
                        best = cyc
                    continue
                path.append(w)
                extend(w, blocked | rows[last] | 1 << w)
                path.pop()

        for p1 in bits(near_s & allowed):
            path.append(p1)
            extend(p1, 1 << s | 1 << p1)
            path.pop()
    return best


def find_hole(g: Graph, cap: int = HOLE_CAP) -> HoleWitness | None:
    check_cap("find_hole", g, cap)
    cyc = _shortest_hole(g, odd=False, min_len=4)
    return HoleWitness(cyc) if cyc else None


def find_odd_hole(g: Graph, cap: int = HOLE_CAP) -> HoleWitness | None:
    """A shortest chordless odd cycle of length >= 5, or None."""
    check_cap("find_odd_hole", g, cap)
    cyc = _shortest_hole(g, odd=True, min_len=5)
    return HoleWitness(cyc) if cyc else None


def find_odd_antihole(g: Graph, cap: int = HOLE_CAP) -> HoleWitness | None:
    hole = find_odd_hole(complement(g), cap)
    return HoleWitness(hole.cycle, in_complement=True) if hole else None


def is_berge(g: Graph, cap: int = HOLE_CAP) -> bool:
    return find_odd_hole(g, cap) is None and find_odd_antihole(g, cap) is None


def berge_witness(g: Graph, cap: int = HOLE_CAP) -> HoleWitness | None:
    return find_odd_hole(g, cap) or find_odd_antihole(g, cap)


# prisms ------------------------------------------------------------------


@dataclass(frozen=True)
class PrismWitness:
    triangles: tuple[tuple[int, int, int], tuple[int, int, int]]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def vertices(self) -> tuple[int, ...]:
        vs = set()
        for p in self.paths:
            vs.update(p)
        return tuple(sorted(vs))

    def to_json(self) -> dict:
        return {"triangles": [list(t) for t in self.triangles], "paths": [list(p) for p in self.paths]}


def is_prism(g: Graph, w: PrismWitness) -> bool:
    """The union of the paths induces exactly the two triangles plus the path
    edges."""
    paths = w.paths
    if any(len(p) < 2 for p in paths):
        return False
    tops = tuple(p[0] for p in paths)
    bottoms = tuple(p[-1] for p in paths)
    if sorted(tops) != sorted(w.triangles[0]) or sorted(bottoms) != sorted(w.triangles[1]):
        return False
    verts = [v for p in paths for v in p]
    if len(set(verts)) != len(verts):
        return False
    expected = set()
    for t in (tops, bottoms):
        for a, b in combinations(t, 2):
            expected.add(frozenset((a, b)))
    for p in paths:
        for a, b in zip(p, p[1:]):
            expected.add(frozenset((a, b)))
    for a, b in combinations(verts, 2):
        if g.has_edge(a, b) != (frozenset((a, b)) in expected):
            return False
    return True


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.n):
        for b in bits(g.rows[a] >> (a + 1) << (a + 1)):
            for c in bits(g.rows[a] & g.rows[b] & ~((1 << (b + 1)) - 1)):
                out.append((a, b, c))
    return out


def _paths_between(g: Graph, a: int, b: int, interior: int) -> list[tuple[int, ...]]:
    return list(_iter_paths(g, a, 1 << b, interior))


def find_prism(g: Graph, min_vertices: int = 6, cap: int = HOLE_CAP) -> PrismWitness | None:
    """First induced prism with at least ``min_vertices`` vertices."""
    check_cap("find_prism", g, cap)
    rows = g.rows
    tris = _triangles(g)
    for t1, t2 in combinations(tris, 2):
        if set(t1) & set(t2):
            continue
        tmask = to_mask(t1 + t2)
        for perm in permutations(t2):
            # a_i is linked to b_i only; other cross pairs must be non-adjacent
            if any(rows[t1[i]] >> perm[j] & 1 for i in range(3) for j in range(3) if i != j):
                continue
            options = []
            for i in range(3):
                others = tmask & ~(1 << t1[i] | 1 << perm[i])
                # interior vertices must avoid the other four triangle vertices
                interior = g.vertex_mask & ~tmask
                for v in bits(others):
                    interior &= ~rows[v]
                options.append(_paths_between(g, t1[i], perm[i], interior))
            if not all(options):
                continue
            found = _combine_prism_paths(g, options, min_vertices)
            if found:
                return PrismWitness((t1, tuple(perm)), found)
    return None


def _combine_prism_paths(g: Graph, options, min_vertices: int):
    rows = g.rows
    for p1 in options[0]:
        m1 = to_mask(p1[1:-1])
        n1 = 0
        for v in bits(m1):
            n1 |= rows[v]
        for p2 in options[1]:
            m2 = to_mask(p2[1:-1])
            if m2 & (m1 | n1):
                continue
            n2 = n1
            for v in bits(m2):
                n2 |= rows[v]
            for p3 in options[2]:
                m3 = to_mask(p3[1:-1])
                if m3 & (m1 | m2 | n2):
                    continue
                if len(p1) + len(p2) + len(p3) >= min_vertices:
                    return (p1, p2, p3)
    return None


def find_long_prism(g: Graph, cap: int = HOLE_CAP) -> PrismWitness | None:
    """An induced prism on at least seven vertices, or None."""
    return find_prism(g, min_vertices=7, cap=cap)


# pattern library --------------------------------------------------------------

# Configuration data, not derived: a1-a2-a3-a4-a1 and b1-b2-b3-b4-b1 are
# 4-holes with chords a1a3 and b1b3 (two diamonds), joined by the matching
# a_i b_i. Labels a1..a4 = 0..3, b1..b4 = 4..7. The resulting graph is Berge
# and self-complementary.
DOUBLE_DIAMOND_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 0), (0, 2),
    (4, 5), (5, 6), (6, 7), (7, 4), (4, 6),
    (0, 4), (1, 5), (2, 6), (3, 7),
)

DOUBLE_DIAMOND = build_graph(8, DOUBLE_DIAMOND_EDGES)


def _k33_minus_edge() -> Graph:
    edges = [(i, 3 + j) for i in range(3) for j in range(3) if (i, j) != (2, 2)]
    return build_graph(6, edges)


LK33E = line_graph(_k33_minus_edge())[0]

PATTERNS: dict[str, Graph] = {
    "claw": CLAW,
    "diamond": DIAMOND,
    "double-diamond": DOUBLE_DIAMOND,
    "lk33e": LK33E,
}


def pattern(name: str) -> Graph:
    try:
        return PATTERNS[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; known: {', '.join(PATTERNS)}") from None


def is_bipartisan(g: Graph, cap: int = HOLE_CAP) -> tuple[bool, dict | None]:
    """No odd hole, long prism, double-diamond or L(K3,3 - e) in g or its
    complement. On failure the first violation found is described."""
    check_cap("is_bipartisan", g, cap)
    for in_comp, h in ((False, g), (True, complement(g))):
        hole = find_odd_hole(h, cap)
        if hole:
            return False, {"pattern": "odd-hole", "in_complement": in_comp, "vertices": list(hole.cycle)}
        prism = find_long_prism(h, cap)
        if prism:
            return False, {"pattern": "long-prism", "in_complement": in_comp, "vertices": list(prism.vertices)}
        for name in ("double-diamond", "lk33e"):
            hit = find_induced(h, PATTERNS[name])
            if hit is not None:
                return False, {"pattern": name, "in_complement": in_comp, "vertices": list(hit)}
    return True, None


# star cutsets --------------------------------------------------------------


@dataclass(frozen=True)
class StarCutset:
    center: int
    members: tuple[int, ...]

    def to_json(self) -> dict:
        return {"center": self.center, "members": list(self.members)}


def is_star_cutset(g: Graph, center: int, members) -> bool:
    mset = set(members)
    if center not in mset:
        return False
    if any(v != center and not g.has_edge(center, v) for v in mset):
        return False
    rest = g.vertex_mask & ~to_mask(mset)
    return len(g.components(rest)) >= 2


def find_star_cutset(g: Graph) -> StarCutset | None:
    """First star cutset by centre, then by member subset (size, then
    lexicographic) of the centre's neighbourhood."""
    for c in range(g.n):
        nbrs = g.neighbors(c)
        for size in range(len(nbrs) + 1):
            for extra in combinations(nbrs, size):
                members = tuple(sorted((c,) + extra))
                rest = g.vertex_mask & ~to_mask(members)
                if len(g.components(rest)) >= 2:
                    return StarCutset(c, members)
    return None


class NestedPairError(GraphError):
    """A precondition of the nested odd-pair construction failed."""


def star_cutset_from_nested_pairs(g: Graph, k1, k1_sub, k2, cap: int = PATH_CAP) -> StarCutset:
    """Star cutset {a} | N(a) - {c} built from odd pairs {K1, K2} and
    {K1', K2} with K1' a proper sub-clique of K1 and K2 maximal.

    ``a`` in K1' is non-adjacent to some ``b`` in K2, ``c`` lies in K1 - K1';
    the result is checked to separate c from b.
    """
    k1, k1_sub, k2 = (tuple(sorted(set(x))) for x in (k1, k1_sub, k2))
    for name, k in (("K1", k1), ("K1_sub", k1_sub), ("K2", k2)):
        if not k or not g.is_clique(k):
            raise NestedPairError(f"{name}={k} is not a non-empty clique")
    if not set(k1_sub) < set(k1):
        raise NestedPairError(f"K1_sub={k1_sub} must be a proper sub-clique of K1={k1}")
    if not is_maximal_clique(g, k2):
        raise NestedPairError(f"K2={k2} is not a maximal clique")
    if not classify_clique_pair(g, k1, k2, cap).is_odd:
        raise NestedPairError("{K1, K2} is not an odd pair of cliques")
    if not classify_clique_pair(g, k1_sub, k2, cap).is_odd:
        raise NestedPairError("{K1_sub, K2} is not an odd pair of cliques")
    c = min(set(k1) - set(k1_sub))
    for a in k1_sub:
        for b in k2:
            if g.has_edge(a, b):
                continue
            members = tuple(sorted(({a} | set(g.neighbors(a))) - {c}))
            rest = g.vertex_mask & ~to_mask(members)
            comps = g.components(rest)
            side_c = next(x for x in comps if x >> c & 1)
            if side_c >> b & 1:
                raise AssertionError(f"cutset {members} fails to separate {c} from {b}")
            return StarCutset(a, members)
    raise NestedPairError("every vertex of K1_sub sees all of K2, impossible when K2 is maximal and the pair is odd")
