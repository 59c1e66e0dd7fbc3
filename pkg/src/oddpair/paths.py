"""Induced paths, even pairs of vertices, and odd/even pairs of cliques."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .graph import Graph, GraphError, bits, complement, induced_subgraph, to_mask
from .invariants import check_cap, maximal_cliques

PATH_CAP = 16
QUASI_PARITY_CAP = 9


@dataclass(frozen=True, order=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def parity(self) -> int:
        return self.length % 2

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "length": self.length}


def canonical_path(vertices) -> PathWitness:
    vs = tuple(vertices)
    if vs and vs[0] > vs[-1]:
        vs = vs[::-1]
    return PathWitness(vs)


def is_induced_path(g: Graph, vertices) -> bool:
    """Independent re-check: distinct vertices, consecutive ones adjacent,
    no other adjacencies."""
    vs = list(vertices)
    if not vs or len(set(vs)) != len(vs):
        return False
    for i, u in enumerate(vs):
        for j in range(i + 1, len(vs)):
            if g.has_edge(u, vs[j]) != (j == i + 1):
                return False
    return True


def _iter_paths(g: Graph, start: int, targets: int, interior: int) -> Iterator[tuple[int, ...]]:
    """Depth-first enumeration of induced paths from ``start`` that end at a
    vertex of ``targets`` and whose interior vertices lie in ``interior``.

    Paths stop at the first target reached. The single-vertex path is not
    produced here.
    """
    rows = g.rows
    path = [start]

    def extend(last: int, blocked: int) -> Iterator[tuple[int, ...]]:
        # blocked: vertices on the path or adjacent to a non-last path vertex
        cand = rows[last] & ~blocked
        for w in bits(cand):
            if targets >> w & 1:
                path.append(w)
                yield tuple(path)
                path.pop()
            elif interior >> w & 1:
                path.append(w)
                yield from extend(w, blocked | rows[last] | 1 << w)
                path.pop()

    yield from extend(start, 1 << start)


def iter_induced_paths(g: Graph, u: int, v: int) -> Iterator[PathWitness]:
    a, b = min(u, v), max(u, v)
    interior = g.vertex_mask & ~(1 << a | 1 << b)
    for p in _iter_paths(g, a, 1 << b, interior):
        yield PathWitness(p)


def enumerate_induced_paths(g: Graph, u: int, v: int, cap: int = PATH_CAP) -> list[PathWitness]:
    """Every chordless u-v path, oriented from the smaller endpoint."""
    if u == v:
        raise GraphError("induced path endpoints must differ")
    check_cap("enumerate_induced_paths", g, cap)
    return list(iter_induced_paths(g, u, v))


class EvenPairCheck(NamedTuple):
    even: bool
    odd_witness: PathWitness | None
    no_path: bool

    def __bool__(self):
        return self.even


def is_even_pair(g: Graph, u: int, v: int, cap: int = PATH_CAP) -> EvenPairCheck:
    """Whether every chordless u-v path has even length.

    A pair with no path at all is reported even with ``no_path`` set.
    """
    if u == v:
        raise GraphError("an even pair needs two distinct vertices")
    if g.has_edge(u, v):
        raise GraphError(f"vertices {u} and {v} are adjacent")
    check_cap("is_even_pair", g, cap)
    seen = False
    for p in iter_induced_paths(g, u, v):
        seen = True
        if p.length % 2:
            return EvenPairCheck(False, p, False)
    return EvenPairCheck(True, None, not seen)


def find_even_pair(g: Graph, cap: int = PATH_CAP, allow_vacuous: bool = False) -> tuple[int, int] | None:
    """First even pair (u < v, lexicographic scan), or None.

    Pairs joined by no path are skipped unless ``allow_vacuous``.
    """
    check_cap("find_even_pair", g, cap)
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        res = is_even_pair(g, u, v, cap)
        if res.even and (allow_vacuous or not res.no_path):
            return (u, v)
    return None


# pairs of cliques -----------------------------------------------------------


class Verdict(enum.Enum):
    ODD_PAIR = "OddPair"
    EVEN_PAIR = "EvenPair"
    MIXED = "Mixed"
    NO_EXTERNAL_PATH = "NoExternalPath"


@dataclass(frozen=True)
class PairClassification:
    verdict: Verdict
    odd_witness: PathWitness | None = None
    even_witness: PathWitness | None = None

    @property
    def is_odd(self) -> bool:
        return self.verdict is Verdict.ODD_PAIR

    def is_odd_literal(self) -> bool:
        """Odd in the literal sense: no external path of even length."""
        return self.verdict in (Verdict.ODD_PAIR, Verdict.NO_EXTERNAL_PATH)

    def is_even_literal(self) -> bool:
        return self.verdict in (Verdict.EVEN_PAIR, Verdict.NO_EXTERNAL_PATH)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "odd_witness": self.odd_witness.to_json() if self.odd_witness else None,
            "even_witness": self.even_witness.to_json() if self.even_witness else None,
        }


def _as_clique(g: Graph, clique: Iterable[int], name: str) -> tuple[int, ...]:
    vs = tuple(sorted(set(clique)))
    if not vs:
        raise GraphError(f"{name} is empty")
    if any(not 0 <= v < g.n for v in vs):
        raise GraphError(f"{name} has a vertex outside the graph")
    if not g.is_clique(vs):
        raise GraphError(f"{name}={vs} is not a clique")
    return vs


def iter_external_paths(g: Graph, k1, k2) -> Iterator[PathWitness]:
    """External induced paths between cliques ``k1`` and ``k2``, each once.

    Includes the length-0 path for every common vertex and the edges between
    the two cliques. A longer path meets each clique only in its own end, so
    it runs from K1 - K2 to K2 - K1; without this, intersecting cliques
    would always have a length-1 path through a common vertex.
    """
    m1, m2 = to_mask(k1), to_mask(k2)
    outside = g.vertex_mask & ~(m1 | m2)
    seen: set[tuple[int, ...]] = set()
    for a in bits(m1 & m2):
        seen.add((a,))
        yield PathWitness((a,))
    for a in bits(m1 & ~m2):
        for p in _iter_paths(g, a, m2 & ~m1, outside):
            w = canonical_path(p)
            if w.vertices not in seen:
                seen.add(w.vertices)
                yield w


def external_paths(g: Graph, k1, k2, cap: int = PATH_CAP) -> list[PathWitness]:
    k1 = _as_clique(g, k1, "K1")
    k2 = _as_clique(g, k2, "K2")
    check_cap("external_paths", g, cap)
    return sorted(iter_external_paths(g, k1, k2), key=lambda p: (p.length, p.vertices))


def classify_clique_pair(g: Graph, k1, k2, cap: int = PATH_CAP) -> PairClassification:
    """Verdict on the parities of all external paths between two cliques.

    Enumeration stops as soon as both parities have been seen.
    """
    k1 = _as_clique(g, k1, "K1")
    k2 = _as_clique(g, k2, "K2")
    check_cap("classify_clique_pair", g, cap)
    if k2 < k1:
        k1, k2 = k2, k1
    odd = even = None
    for p in iter_external_paths(g, k1, k2):
        if p.length % 2:
            odd = odd or p
        else:
            even = even or p
        if odd and even:
            return PairClassification(Verdict.MIXED, odd, even)
    if odd:
        return PairClassification(Verdict.ODD_PAIR, odd, None)
    if even:
        return PairClassification(Verdict.EVEN_PAIR, None, even)
    return PairClassification(Verdict.NO_EXTERNAL_PATH)


def is_trivial_odd_pair(g: Graph, k1, k2) -> bool:
    """Disjoint cliques whose union is itself a clique."""
    k1 = _as_clique(g, k1, "K1")
    k2 = _as_clique(g, k2, "K2")
    if set(k1) & set(k2):
        raise GraphError("a trivial odd pair needs disjoint cliques")
    return g.is_clique(k1 + k2)


def find_odd_pair_of_maximal_cliques(g: Graph, cap: int = PATH_CAP):
    """First pair of maximal cliques classified OddPair, or None."""
    check_cap("find_odd_pair_of_maximal_cliques", g, cap)
    cliques = maximal_cliques(g)
    for k1, k2 in combinations(cliques, 2):
        if classify_clique_pair(g, k1, k2, cap).is_odd:
            return k1, k2
    return None


# quasi-parity ----------------------------------------------------------------


@dataclass(frozen=True)
class QuasiParityStatus:
    strict_qp: bool
    qp: bool
    strict_witness: tuple[int, ...] | None
    qp_witness: tuple[int, ...] | None

    @property
    def witness(self) -> tuple[int, ...] | None:
        return self.qp_witness if self.qp_witness is not None else self.strict_witness


def quasi_parity_status(g: Graph, cap: int = QUASI_PARITY_CAP, allow_vacuous: bool = True) -> QuasiParityStatus:
    """Strict quasi-parity and quasi-parity by scanning every induced subgraph.

    Witnesses are the first failing vertex subsets in (size, lexicographic)
    order. Even pairs count in the literal sense by default, so two
    vertices in different components form one.
    """
    check_cap("quasi_parity_status", g, cap)
    strict_w = qp_w = None
    masks = sorted(range(1, 1 << g.n), key=lambda m: (m.bit_count(), tuple(bits(m))))
    for mask in masks:
        vs = tuple(bits(mask))
        h, _ = induced_subgraph(g, vs)
        own = None
        if strict_w is None and not h.is_clique(range(h.n)):
            own = find_even_pair(h, cap, allow_vacuous)
            if own is None:
                strict_w = vs
        if qp_w is None and h.n >= 2:
            if own is None:
                own = find_even_pair(h, cap, allow_vacuous)
            if own is None and find_even_pair(complement(h), cap, allow_vacuous) is None:
                qp_w = vs
        if strict_w is not None and qp_w is not None:
            break
    return QuasiParityStatus(strict_w is None, qp_w is None, strict_w, qp_w)
