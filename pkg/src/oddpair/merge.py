"""The clique merge G_{K1=K2} and the Kempe-chain recolouring that shows it
keeps perfect graphs perfect when {K1, K2} is an odd pair of cliques."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, bits, to_mask
from .invariants import Coloring, clique_number, is_proper_coloring
from .paths import PATH_CAP, PathWitness, classify_clique_pair


@dataclass(frozen=True)
class MergeResult:
    merged: Graph
    added_edges: tuple[tuple[int, int], ...]
    k1: tuple[int, ...]
    k2: tuple[int, ...]


def _disjoint_cliques(g: Graph, k1, k2) -> tuple[tuple[int, ...], tuple[int, ...]]:
    k1 = tuple(sorted(set(k1)))
    k2 = tuple(sorted(set(k2)))
    for name, k in (("K1", k1), ("K2", k2)):
        if not k or not g.is_clique(k):
            raise GraphError(f"{name}={k} is not a non-empty clique")
    if set(k1) & set(k2):
        raise GraphError(f"cliques {k1} and {k2} overlap")
    return k1, k2


def merge_cliques(g: Graph, k1, k2) -> MergeResult:
    """Add every missing edge between two disjoint cliques."""
    k1, k2 = _disjoint_cliques(g, k1, k2)
    rows = list(g.rows)
    added = []
    m1, m2 = to_mask(k1), to_mask(k2)
    for u in k1:
        for v in bits(m2 & ~rows[u]):
            added.append((min(u, v), max(u, v)))
        rows[u] |= m2
    for v in k2:
        rows[v] |= m1
    return MergeResult(Graph._trusted(g.n, rows), tuple(sorted(added)), k1, k2)


class MergedCliqueCase(enum.Enum):
    CLIQUE_OF_G = "CliqueOfG"
    INSIDE_UNION = "InsideUnion"


@dataclass(frozen=True)
class DichotomyFailure:
    """An even external path v1 - v - v2 showing the pair was not odd."""

    path: PathWitness


def classify_merged_clique(g: Graph, k1, k2, k) -> MergedCliqueCase | DichotomyFailure:
    """Which alternative holds for a clique ``k`` of the merged graph.

    When ``k`` is neither a clique of ``g`` nor inside the union, the
    length-2 external path that rules this out for odd pairs is returned.
    """
    res = merge_cliques(g, k1, k2)
    k = tuple(sorted(set(k)))
    if not res.merged.is_clique(k):
        raise GraphError(f"{k} is not a clique of the merged graph")
    if g.is_clique(k):
        return MergedCliqueCase.CLIQUE_OF_G
    union = set(res.k1) | set(res.k2)
    if set(k) <= union:
        return MergedCliqueCase.INSIDE_UNION
    v1, v2 = next((a, b) for a in k if a in res.k1 for b in k if b in res.k2 and not g.has_edge(a, b))
    v = next(x for x in k if x not in union)
    return DichotomyFailure(PathWitness((v1, v, v2)))


class NotAnOddPair(GraphError):
    """The clique pair has an even external path; ``witness`` shows one."""

    def __init__(self, message: str, witness: PathWitness | None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class KempeSwap:
    red: int
    blue: int
    component: tuple[int, ...]

    def to_json(self) -> dict:
        return {"colors": [self.red, self.blue], "component": list(self.component)}


@dataclass
class RecolorResult:
    coloring: Coloring
    merged: Graph
    fresh: dict[int, int] = field(default_factory=dict)
    trace: list[KempeSwap] = field(default_factory=list)


def _bfs_path(g: Graph, within: int, src: int, dst: int) -> tuple[int, ...] | None:
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while path[-1] != src:
                path.append(parent[path[-1]])
            return tuple(path[::-1])
        for w in bits(g.rows[u] & within):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def recolor_after_merge(g: Graph, coloring, k1, k2, check_pair: bool = True,
                        cap: int = PATH_CAP) -> RecolorResult:
    """Turn an omega(g)-colouring of ``g`` into an optimal colouring of the
    merged graph using max(omega(g), |K1| + |K2|) colours.

    Fresh colours go first to union vertices whose colour repeats inside the
    union (lowest index first); every remaining repeat (v1 in K1, v2 in K2)
    is removed by a red/blue exchange on the Kempe component of v1, where
    blue is the lowest original colour absent from the union. With
    ``check_pair=False`` the odd-pair precondition is skipped and a Kempe
    component reaching v2 raises NotAnOddPair with the even path found.
    """
    k1, k2 = _disjoint_cliques(g, k1, k2)
    if check_pair:
        cls = classify_clique_pair(g, k1, k2, cap)
        if not cls.is_odd_literal():
            raise NotAnOddPair(f"{{K1, K2}} classifies as {cls.verdict.value}", cls.even_witness)
    colors = list(coloring.colors if isinstance(coloring, Coloring) else coloring)
    omega = clique_number(g)
    if not is_proper_coloring(g, colors):
        raise GraphError("input colouring is not proper")
    if colors and (min(colors) < 0 or max(colors) >= omega):
        raise GraphError(f"input colouring must use colours 0..{omega - 1}")
    merged = merge_cliques(g, k1, k2).merged
    union = k1 + k2
    gamma = max(0, len(union) - omega)
    fresh: dict[int, int] = {}
    next_color = omega
    while len(fresh) < gamma:
        counts: dict[int, int] = {}
        for v in union:
            if v not in fresh:
                counts[colors[v]] = counts.get(colors[v], 0) + 1
        pick = next((v for v in sorted(union) if v not in fresh and counts[colors[v]] > 1), None)
        if pick is None:
            pick = next(v for v in sorted(union) if v not in fresh)
        fresh[pick] = next_color
        colors[pick] = next_color
        next_color += 1

    trace: list[KempeSwap] = []
    while True:
        repeats = sorted(
            (colors[a], a, b) for a in k1 for b in k2 if colors[a] == colors[b]
        )
        if not repeats:
            break
        red, v1, v2 = repeats[0]
        present = {colors[v] for v in union}
        blue = next(c for c in range(omega) if c not in present)
        two = to_mask(v for v in range(g.n) if colors[v] in (red, blue))
        comp = next(c for c in g.components(two) if c >> v1 & 1)
        if comp >> v2 & 1:
            path = _bfs_path(g, comp, v1, v2)
            raise NotAnOddPair("Kempe component of v1 reaches v2", PathWitness(path))
        for v in bits(comp):
            colors[v] = blue if colors[v] == red else red
        trace.append(KempeSwap(red, blue, tuple(bits(comp))))

    result = Coloring(tuple(colors))
    if not is_proper_coloring(merged, colors):
        raise AssertionError("recolouring produced an improper colouring of the merged graph")
    return RecolorResult(result, merged, fresh, trace)
