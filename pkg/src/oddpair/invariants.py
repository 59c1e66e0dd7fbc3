"""Exact clique, stability and colouring invariants, and brute-force
perfectness.

Two independent routes are kept on purpose: ``chromatic_number`` is a
branch-and-bound search on a single graph, while ``is_perfect`` and
``lovasz_bound_holds`` run subset dynamic programmes over every induced
subgraph at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .graph import Graph, bits, complement

CHROMATIC_CAP = 20
PERFECT_CAP = 11


class CapExceeded(ValueError):
    """The graph is larger than the configured exhaustive-search cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap}")
        self.n = n
        self.cap = cap


def check_cap(what: str, g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(what, g.n, cap)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[tuple[int, ...]]:
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            by_color.setdefault(c, []).append(v)
        return sorted(tuple(vs) for vs in by_color.values())


def is_proper_coloring(g: Graph, colors) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


class InvariantSummary(NamedTuple):
    n: int
    omega: int
    alpha: int
    chi: int


# cliques ----------------------------------------------------------------


def _max_clique(rows: tuple[int, ...], candidates: int) -> int:
    """Size and mask of a maximum clique inside ``candidates``."""
    best_size = 0
    best_mask = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, clique
            return
        if size + cand.bit_count() <= best_size:
            return
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(clique | low, size + 1, cand & rows[v])

    expand(0, 0, candidates)
    return best_mask


def maximum_clique(g: Graph) -> tuple[int, ...]:
    return tuple(bits(_max_clique(g.rows, g.vertex_mask)))


def clique_number(g: Graph) -> int:
    return _max_clique(g.rows, g.vertex_mask).bit_count()


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, as sorted tuples in lexicographic order.

    Bron-Kerbosch with pivoting; the graph with no vertices has none.
    """
    rows = g.rows
    out: list[tuple[int, ...]] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        pu = p | x
        pivot = max(bits(pu), key=lambda u: (p & rows[u]).bit_count())
        for v in bits(p & ~rows[pivot]):
            bit = 1 << v
            bk(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if g.n:
        bk(0, g.vertex_mask, 0)
    return sorted(out)


def all_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Every non-empty clique, ordered by size then lexicographically."""
    rows = g.rows
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], cand: int) -> None:
        for v in bits(cand):
            c = clique + (v,)
            out.append(c)
            grow(c, cand & rows[v] & ~((1 << (v + 1)) - 1))

    grow((), g.vertex_mask)
    out.sort(key=lambda c: (len(c), c))
    return out


def _cliques_of_size(rows: tuple[int, ...], cand: int, k: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], cand: int, need: int) -> None:
        if need == 0:
            out.append(clique)
            return
        if cand.bit_count() < need:
            return
        for v in bits(cand):
            grow(clique + (v,), cand & rows[v] & ~((1 << (v + 1)) - 1), need - 1)

    grow((), cand, k)
    return out


def cliques_of_size(g: Graph, k: int) -> list[tuple[int, ...]]:
    return _cliques_of_size(g.rows, g.vertex_mask, k)


def omega_cliques(g: Graph) -> list[tuple[int, ...]]:
    return cliques_of_size(g, clique_number(g))


def alpha_stable_sets(g: Graph) -> list[tuple[int, ...]]:
    return omega_cliques(complement(g))


def is_maximal_clique(g: Graph, clique) -> bool:
    if not g.is_clique(clique):
        return False
    common = g.vertex_mask
    for v in clique:
        common &= g.rows[v]
    return common == 0


# colouring ----------------------------------------------------------------


def _k_colorable(g: Graph, k: int, order: list[int]) -> list[int] | None:
    colors = [-1] * g.n
    rows = g.rows

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = 0
        for u in bits(rows[v]):
            if colors[u] >= 0:
                taken |= 1 << colors[u]
        # a brand-new colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if not taken >> c & 1:
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return colors if place(0, 0) else None


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness colouring using exactly that
    many colours."""
    check_cap("chromatic_number", g, cap)
    if g.n == 0:
        return 0, Coloring(())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    k = clique_number(g)
    while True:
        colors = _k_colorable(g, k, order)
        if colors is not None:
            return k, Coloring(tuple(colors))
        k += 1


def summary(g: Graph) -> InvariantSummary:
    return InvariantSummary(g.n, clique_number(g), independence_number(g), chromatic_number(g)[0])


# perfectness over all induced subgraphs ---------------------------------------


@lru_cache(maxsize=None)
def _subset_order(n: int) -> tuple[int, ...]:
    # increasing size, then lexicographic on the sorted vertex tuple
    return tuple(sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), tuple(bits(m)))))


def _omega_table(rows: tuple[int, ...], n: int) -> list[int]:
    om = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        a = om[s ^ low]
        b = 1 + om[s & rows[v]]
        om[s] = a if a > b else b
    return om


def _chi_table(rows: tuple[int, ...], n: int) -> list[int]:
    size = 1 << n
    stable = bytearray(size)
    stable[0] = 1
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        stable[s] = stable[s ^ low] and not (s & rows[v])
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s & ~low & ~rows[v]
        base = s & ~low
        best = 1 << 30
        sub = rest
        while True:
            if stable[sub]:
                c = chi[base & ~sub]
                if c < best:
                    best = c
                    if best == 0:
                        break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best + 1
    return chi


class PerfectnessCheck(NamedTuple):
    perfect: bool
    witness: tuple[int, ...] | None

    def __bool__(self):
        return self.perfect


@lru_cache(maxsize=1 << 16)
def is_perfect(g: Graph, cap: int = PERFECT_CAP) -> PerfectnessCheck:
    """Check chi(H) == omega(H) for every induced subgraph H.

    The witness is the first violating vertex subset in (size, lexicographic)
    order, hence a minimal imperfect induced subgraph.
    """
    check_cap("is_perfect", g, cap)
    if g.n == 0:
        return PerfectnessCheck(True, None)
    om = _omega_table(g.rows, g.n)
    chi = _chi_table(g.rows, g.n)
    for s in _subset_order(g.n):
        if chi[s] != om[s]:
            return PerfectnessCheck(False, tuple(bits(s)))
    return PerfectnessCheck(True, None)


def lovasz_bound_holds(g: Graph, cap: int = PERFECT_CAP) -> PerfectnessCheck:
    """Check alpha(H) * omega(H) >= |V(H)| for every induced subgraph H."""
    check_cap("lovasz_bound_holds", g, cap)
    if g.n == 0:
        return PerfectnessCheck(True, None)
    om = _omega_table(g.rows, g.n)
    al = _omega_table(complement(g).rows, g.n)
    for s in _subset_order(g.n):
        if al[s] * om[s] < s.bit_count():
            return PerfectnessCheck(False, tuple(bits(s)))
    return PerfectnessCheck(True, None)


def is_minimal_imperfect(g: Graph, cap: int = PERFECT_CAP) -> bool:
    check = is_perfect(g, cap)
    return not check.perfect and check.witness == tuple(range(g.n))
