"""(p, q)-partitionable graphs: recognition by exact cover, the eight
Bland-Huang-Trotter properties, the omega-sum theorem for odd pairs of
cliques, and the two case analyses on merged graphs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError, bits, complement, to_mask
from .invariants import (
    all_cliques,
    alpha_stable_sets,
    check_cap,
    clique_number,
    cliques_of_size,
    independence_number,
    is_minimal_imperfect,
    omega_cliques,
)
from .merge import merge_cliques
from .paths import PATH_CAP, PathWitness, classify_clique_pair, is_trivial_odd_pair

PARTITION_CAP = 13

Partition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PartitionWitness:
    p: int
    q: int
    # v -> (p cliques of size q, q stable sets of size p), both covering V - v
    per_vertex: dict[int, tuple[Partition, Partition]]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "per_vertex": {
                str(v): {"cliques": [list(c) for c in cl], "stables": [list(s) for s in st]}
                for v, (cl, st) in sorted(self.per_vertex.items())
            },
        }


def _exact_cover(universe: int, parts: list[int]) -> list[int] | None:
    """Pick parts (bitmasks) partitioning ``universe``; lowest vertex first."""
    by_vertex: dict[int, list[int]] = {}
    for m in parts:
        if m & ~universe == 0:
            by_vertex.setdefault((m & -m).bit_length() - 1, []).append(m)
    chosen: list[int] = []

    def solve(left: int) -> bool:
        if not left:
            return True
        low = (left & -left).bit_length() - 1
        for m in by_vertex.get(low, ()):
            if m & ~left == 0:
                chosen.append(m)
                if solve(left & ~m):
                    return True
                chosen.pop()
        return False

    return chosen if solve(universe) else None


def _as_partition(masks: list[int]) -> Partition:
    return tuple(sorted(tuple(bits(m)) for m in masks))


def _try_pq(g: Graph, p: int, q: int) -> PartitionWitness | None:
    cliques = [to_mask(c) for c in cliques_of_size(g, q)]
    stables = [to_mask(s) for s in cliques_of_size(complement(g), p)]
    per_vertex = {}
    for v in range(g.n):
        rest = g.vertex_mask & ~(1 << v)
        cl = _exact_cover(rest, cliques)
        if cl is None:
            return None
        st = _exact_cover(rest, stables)
        if st is None:
            return None
        per_vertex[v] = (_as_partition(cl), _as_partition(st))
    return PartitionWitness(p, q, per_vertex)


def find_partitionable_witness(g: Graph, cap: int = PARTITION_CAP) -> PartitionWitness | None:
    """Search every (p, q) with p*q + 1 = n, trying (alpha, omega) first."""
    check_cap("find_partitionable_witness", g, cap)
    n = g.n
    if n < 2:
        return None
    candidates = [(p, (n - 1) // p) for p in range(1, n) if (n - 1) % p == 0]
    first = (independence_number(g), clique_number(g))
    if first in candidates:
        candidates.remove(first)
        candidates.insert(0, first)
    for p, q in candidates:
        w = _try_pq(g, p, q)
        if w is not None:
            return w
    return None


def validate_witness(g: Graph, w: PartitionWitness) -> list[str]:
    """Problems with ``w`` as a partitionability certificate; empty if valid."""
    problems = []
    if w.p < 1 or w.q < 1 or w.p * w.q + 1 != g.n:
        problems.append(f"n={g.n} is not p*q+1 for (p,q)=({w.p},{w.q})")
    if set(w.per_vertex) != set(range(g.n)):
        problems.append("witness does not cover every vertex")
    for v, (cl, st) in sorted(w.per_vertex.items()):
        rest = sorted(set(range(g.n)) - {v})
        for name, part, count, size, ok in (
            ("clique", cl, w.p, w.q, g.is_clique),
            ("stable", st, w.q, w.p, g.is_stable),
        ):
            if sorted(x for blk in part for x in blk) != rest:
                problems.append(f"v={v}: {name} partition does not cover V - v exactly")
            if len(part) != count or any(len(b) != size or not ok(b) for b in part):
                problems.append(f"v={v}: {name} partition has wrong part count, size or type")
    return problems


# Bland-Huang-Trotter ----------------------------------------------------------


def _colorings_as_partitions(g: Graph, k: int) -> list[Partition]:
    """Every partition of V(g) into at most k stable sets."""
    out: list[Partition] = []
    classes: list[int] = []
    rows = g.rows

    def place(v: int) -> None:
        if v == g.n:
            out.append(_as_partition(classes))
            return
        for i, c in enumerate(classes):
            if not rows[v] & c:
                classes[i] = c | 1 << v
                place(v + 1)
                classes[i] = c
        if len(classes) < k:
            classes.append(1 << v)
            place(v + 1)
            classes.pop()

    place(0)
    return out


@dataclass
class BHTReport:
    n: int
    p: int
    q: int
    alpha: int
    omega: int
    p1_alpha_omega: bool
    omega_clique_count: int
    p2_omega_cliques: bool
    alpha_stable_count: int
    p3_alpha_stables: bool
    clique_membership: dict[int, int]
    p4_clique_membership: bool
    stable_membership: dict[int, int]
    p5_stable_membership: bool
    p6_clique_to_stable: bool
    p7_stable_to_clique: bool
    colorings_per_vertex: dict[int, int]
    p8_unique_coloring: bool

    @property
    def properties(self) -> dict[int, bool]:
        return {
            1: self.p1_alpha_omega,
            2: self.p2_omega_cliques,
            3: self.p3_alpha_stables,
            4: self.p4_clique_membership,
            5: self.p5_stable_membership,
            6: self.p6_clique_to_stable,
            7: self.p7_stable_to_clique,
            8: self.p8_unique_coloring,
        }

    @property
    def all_hold(self) -> bool:
        return all(self.properties.values())

    def to_json(self) -> dict:
        return {
            "n": self.n, "p": self.p, "q": self.q, "alpha": self.alpha, "omega": self.omega,
            "omega_clique_count": self.omega_clique_count,
            "alpha_stable_count": self.alpha_stable_count,
            "colorings_per_vertex": {str(v): c for v, c in self.colorings_per_vertex.items()},
            "properties": {str(k): v for k, v in self.properties.items()},
        }


def bht_report(g: Graph, w: PartitionWitness) -> BHTReport:
    problems = validate_witness(g, w)
    if problems:
        raise GraphError("invalid partition witness: " + "; ".join(problems))
    n = g.n
    alpha, omega = independence_number(g), clique_number(g)
    cl = [to_mask(c) for c in omega_cliques(g)]
    st = [to_mask(s) for s in alpha_stable_sets(g)]
    cm = {v: sum(c >> v & 1 for c in cl) for v in range(n)}
    sm = {v: sum(s >> v & 1 for s in st) for v in range(n)}
    c2s = all(sum(1 for s in st if not c & s) == 1 for c in cl)
    s2c = all(sum(1 for c in cl if not c & s) == 1 for s in st)
    counts = {}
    for v in range(n):
        rest = [u for u in range(n) if u != v]
        h = Graph._trusted(n - 1, [_squeeze(g.rows[u], v) for u in rest])
        counts[v] = len(_colorings_as_partitions(h, omega))
    return BHTReport(
        n=n, p=w.p, q=w.q, alpha=alpha, omega=omega,
        p1_alpha_omega=(alpha, omega) == (w.p, w.q),
        omega_clique_count=len(cl), p2_omega_cliques=len(cl) == n,
        alpha_stable_count=len(st), p3_alpha_stables=len(st) == n,
        clique_membership=cm, p4_clique_membership=all(c == omega for c in cm.values()),
        stable_membership=sm, p5_stable_membership=all(c == alpha for c in sm.values()),
        p6_clique_to_stable=c2s, p7_stable_to_clique=s2c,
        colorings_per_vertex=counts, p8_unique_coloring=all(c == 1 for c in counts.values()),
    )


def _squeeze(row: int, v: int) -> int:
    # drop bit v and shift the higher bits down
    low = row & ((1 << v) - 1)
    return low | (row >> (v + 1)) << v


# odd pairs in minimal imperfect graphs -----------------------------------------


@dataclass(frozen=True)
class OddPairRecord:
    k1: tuple[int, ...]
    k2: tuple[int, ...]
    witness: PathWitness | None

    @property
    def size_sum(self) -> int:
        return len(self.k1) + len(self.k2)


@dataclass
class OmegaSumReport:
    omega: int
    pairs_checked: int = 0
    odd_pairs: list[OddPairRecord] = field(default_factory=list)
    violations: list[OddPairRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def size_distribution(self) -> dict[tuple[int, int], int]:
        dist = Counter(tuple(sorted((len(r.k1), len(r.k2)))) for r in self.odd_pairs)
        return dict(sorted(dist.items()))

    def to_json(self) -> dict:
        return {
            "omega": self.omega,
            "pairs_checked": self.pairs_checked,
            "nontrivial_odd_pairs": len(self.odd_pairs),
            "size_distribution": [[a, b, c] for (a, b), c in self.size_distribution.items()],
            "violations": [[list(r.k1), list(r.k2)] for r in self.violations],
        }


def nontrivial_odd_pairs(g: Graph, cap: int = PATH_CAP) -> tuple[int, list[OddPairRecord]]:
    """All non-trivial odd pairs of (not necessarily maximal) cliques.

    Odd is taken literally: no external path of even length. Overlapping
    cliques are never odd since a common vertex is a path of length 0.
    """
    checked = 0
    found = []
    cliques = all_cliques(g)
    for k1, k2 in combinations(cliques, 2):
        if set(k1) & set(k2):
            continue
        if is_trivial_odd_pair(g, k1, k2):
            continue
        checked += 1
        cls = classify_clique_pair(g, k1, k2, cap)
        if cls.is_odd_literal():
            found.append(OddPairRecord(k1, k2, cls.odd_witness))
    return checked, found


def check_omega_sum_theorem(g: Graph, cap: int = PATH_CAP) -> OmegaSumReport:
    """No non-trivial odd pair of cliques has |K1| + |K2| = omega(g)."""
    if not is_minimal_imperfect(g):
        raise GraphError("check_omega_sum_theorem needs a minimal imperfect graph")
    omega = clique_number(g)
    checked, found = nontrivial_odd_pairs(g, cap)
    report = OmegaSumReport(omega, checked, found)
    report.violations = [r for r in found if r.size_sum == omega]
    return report


@dataclass
class StablePreservationReport:
    k1: tuple[int, ...]
    k2: tuple[int, ...]
    destroyed: list[tuple[int, ...]]
    merged_partitionable: bool
    merged_witness: PartitionWitness | None

    @property
    def ok(self) -> bool:
        return not self.destroyed and self.merged_partitionable


def _require_odd_pair(g: Graph, k1, k2, cap: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    k1, k2 = tuple(sorted(k1)), tuple(sorted(k2))
    if set(k1) & set(k2):
        raise GraphError("cliques overlap")
    if not classify_clique_pair(g, k1, k2, cap).is_odd_literal():
        raise GraphError(f"{{{k1}, {k2}}} is not an odd pair of cliques")
    return k1, k2


def check_stable_preservation(g: Graph, k1, k2, cap: int = PATH_CAP) -> StablePreservationReport:
    """Case |K1| + |K2| < omega: merging destroys no alpha-stable set and the
    merged graph is again partitionable."""
    if find_partitionable_witness(g) is None:
        raise GraphError("graph is not partitionable")
    k1, k2 = _require_odd_pair(g, k1, k2, cap)
    if len(k1) + len(k2) >= clique_number(g):
        raise GraphError("needs |K1| + |K2| < omega")
    m1, m2 = to_mask(k1), to_mask(k2)
    destroyed = [s for s in alpha_stable_sets(g) if to_mask(s) & m1 and to_mask(s) & m2]
    merged = merge_cliques(g, k1, k2).merged
    w = find_partitionable_witness(merged)
    return StablePreservationReport(k1, k2, destroyed, w is not None, w)


@dataclass
class UniqueMaxCliqueReport:
    k1: tuple[int, ...]
    k2: tuple[int, ...]
    merged_omega: int
    max_cliques: list[tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return self.max_cliques == [tuple(sorted(self.k1 + self.k2))]


def check_unique_max_clique(g: Graph, k1, k2, cap: int = PATH_CAP) -> UniqueMaxCliqueReport:
    """Case |K1| + |K2| > omega: K1 u K2 is the unique maximum clique of the
    merged graph."""
    if find_partitionable_witness(g) is None:
        raise GraphError("graph is not partitionable")
    k1, k2 = _require_odd_pair(g, k1, k2, cap)
    if len(k1) + len(k2) <= clique_number(g):
        raise GraphError("needs |K1| + |K2| > omega")
    merged = merge_cliques(g, k1, k2).merged
    top = omega_cliques(merged)
    return UniqueMaxCliqueReport(k1, k2, clique_number(merged), top)


@dataclass
class CaseScan:
    below: list[StablePreservationReport] = field(default_factory=list)
    above: list[UniqueMaxCliqueReport] = field(default_factory=list)
    alpha_growth: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.below) and all(r.ok for r in self.above) and not self.alpha_growth


def scan_merge_cases(g: Graph, cap: int = PATH_CAP) -> CaseScan:
    """Run both case analyses on every non-trivial odd pair of ``g``."""
    omega = clique_number(g)
    alpha = independence_number(g)
    scan = CaseScan()
    _, pairs = nontrivial_odd_pairs(g, cap)
    for r in pairs:
        merged = merge_cliques(g, r.k1, r.k2).merged
        if independence_number(merged) > alpha:
            scan.alpha_growth.append((r.k1, r.k2))
        if r.size_sum < omega:
            scan.below.append(check_stable_preservation(g, r.k1, r.k2, cap))
        elif r.size_sum > omega:
            scan.above.append(check_unique_max_clique(g, r.k1, r.k2, cap))
    return scan
