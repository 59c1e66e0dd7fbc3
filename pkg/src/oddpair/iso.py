"""Canonical labelling and isomorphism for small graphs.

Colour refinement followed by individualisation over the first non-singleton
cell; the canonical code is the minimum upper-triangle adjacency word over
all search leaves. Swapping twin vertices is an automorphism, so only one
twin per class is branched on. Intended for graphs up to about a dozen
vertices.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .graph import Graph, bits


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    while True:
        new_cells = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                row = rows[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _twin_reps(rows: tuple[int, ...], cell: int) -> list[int]:
    reps: list[int] = []
    for v in bits(cell):
        for r in reps:
            if rows[v] & ~(1 << r) == rows[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)``: ``order[i]`` is the vertex placed at position i."""
    rows = g.rows
    if g.n == 0:
        return 0, []
    best: list = [None, None]

    def search(cells: list[int]) -> None:
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(rows, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        for v in _twin_reps(rows, cell):
            split = cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1:]
            search(_refine(rows, split))

    search(_refine(rows, [g.vertex_mask]))
    return best[0], best[1]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for u, v in g.edges():
        rows[pos[u]] |= 1 << pos[v]
        rows[pos[v]] |= 1 << pos[u]
    return Graph._trusted(g.n, rows)


def canonical_code(g: Graph) -> tuple[int, int]:
    return g.n, canonical_labeling(g)[0]


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(map(int.bit_count, a.rows)) != sorted(map(int.bit_count, b.rows)):
        return False
    return canonical_code(a) == canonical_code(b)


def find_isomorphism(a: Graph, b: Graph) -> dict[int, int] | None:
    """A vertex bijection a -> b preserving adjacency, or None."""
    if not is_isomorphic(a, b):
        return None
    _, oa = canonical_labeling(a)
    _, ob = canonical_labeling(b)
    return {oa[i]: ob[i] for i in range(a.n)}


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by exhaustive degree-pruned backtracking."""
    n = g.n
    rows = g.rows
    deg = [r.bit_count() for r in rows]
    image = [-1] * n
    used = 0
    count = 0

    def extend(v: int) -> None:
        nonlocal used, count
        if v == n:
            count += 1
            return
        for w in range(n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if (rows[v] >> u & 1) != (rows[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                extend(v + 1)
                used &= ~(1 << w)
        image[v] = -1

    extend(0)
    return count


def labeled_count(g: Graph) -> int:
    """Number of labelled graphs on g.n vertices isomorphic to ``g``."""
    return factorial(g.n) // automorphism_count(g)


def find_induced(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """An embedding of ``pattern`` as an induced subgraph of ``g``.

    Returns ``image`` with ``image[i]`` the vertex of ``g`` carrying pattern
    vertex ``i`` (edges to edges, non-edges to non-edges), or None. Among
    all embeddings the lexicographically smallest in a fixed pattern order
    is returned.
    """
    k = pattern.n
    if k > g.n:
        return None
    if k == 0:
        return ()
    prow = pattern.rows
    # place each next pattern vertex with the most already-placed neighbours
    order: list[int] = []
    placed = 0
    while len(order) < k:
        v = max(
            (u for u in range(k) if not placed >> u & 1),
            key=lambda u: ((prow[u] & placed).bit_count(), prow[u].bit_count(), -u),
        )
        order.append(v)
        placed |= 1 << v
    pdeg = [r.bit_count() for r in prow]
    gdeg = [r.bit_count() for r in g.rows]
    grow = g.rows
    image = [-1] * k
    found: list = []

    def place(i: int, used: int) -> bool:
        if i == k:
            found.append(tuple(image))
            return True
        v = order[i]
        cand = g.vertex_mask & ~used
        for j in range(i):
            u = order[j]
            if prow[v] >> u & 1:
                cand &= grow[image[u]]
            else:
                cand &= ~grow[image[u]]
        for w in bits(cand):
            if gdeg[w] < pdeg[v]:
                continue
            image[v] = w
            if place(i + 1, used | 1 << w):
                return True
        image[v] = -1
        return False

    place(0, 0)
    return found[0] if found else None
