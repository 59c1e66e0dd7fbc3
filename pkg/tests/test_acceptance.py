"""Acceptance criteria, one test each.

Every test prints a ``PASS criterion N`` / ``FAIL criterion N`` line (shown
with ``-s``); the same lines are collected into the terminal summary.
"""

from itertools import combinations
from math import comb, factorial

import pytest

from oddpair.berge import find_star_cutset, is_berge, is_star_cutset, star_cutset_from_nested_pairs
from oddpair.generators import (
    all_double_split_specs,
    enumerate_labeled,
    gen_antihole,
    gen_complete,
    gen_complete_bipartite,
    gen_double_split,
    gen_hole,
    isomorphism_classes,
)
from oddpair.graph import build_graph, contract_pair, decode_graph6
from oddpair.invariants import chromatic_number, is_perfect, lovasz_bound_holds, maximal_cliques
from oddpair.iso import automorphism_count, canonical_code
from oddpair.linegraph import CliqueBipartition, OddCliqueCycle, clique_bipartition, line_graph, verify_bipartition
from oddpair.merge import DichotomyFailure, classify_merged_clique
from oddpair.partitionable import bht_report, check_omega_sum_theorem, find_partitionable_witness
from oddpair.paths import Verdict, classify_clique_pair, external_paths, find_even_pair, is_even_pair
from oddpair.report import revalidate
from oddpair.scans import cmd_conjecture_mini, cmd_conjecture_struct
from oddpair.suites import SuiteConfig, _random_bipartite_roots, cmd_verify

criterion = pytest.mark.criterion


def announce(number: int, ok: bool, text: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}")
    assert ok, f"criterion {number} failed: {text}"


@pytest.fixture(scope="module")
def merge_report():
    return cmd_verify("merge-preserves", SuiteConfig(n_max=7))


@criterion(1, "Berge = perfect = Lovasz bound on every labeled graph with <= 7 vertices")
def test_c01_spgt_desk():
    # literal sweep over labeled graphs up to 6 vertices
    literal = 0
    for n in range(0, 7):
        for g in enumerate_labeled(n):
            assert is_berge(g) == is_perfect(g).perfect == lovasz_bound_holds(g).perfect, g
            literal += 1
    assert literal == sum(2 ** comb(n, 2) for n in range(7))
    # 7 vertices: every class, and the classes account for all 2^21 labeled graphs
    reps = isomorphism_classes(7)
    assert len({canonical_code(g) for g in reps}) == len(reps)
    assert sum(factorial(7) // automorphism_count(g) for g in reps) == 2 ** 21
    bad = [g for g in reps if not (is_berge(g) == is_perfect(g).perfect == lovasz_bound_holds(g).perfect)]
    rep = cmd_verify("spgt-desk", SuiteConfig(n_max=7))
    announce(1, not bad and rep.passed, f"{literal} labeled graphs (n<=6) and {len(reps)} classes (n=7), 0 disagreements")


@criterion(2, "merging an odd pair of cliques of a perfect graph on <= 7 vertices keeps it perfect; recolouring is optimal")
def test_c02_merge_preserves(merge_report):
    items = [r for r in merge_report.verdicts if r.detail.get("odd_pairs") is not None]
    pairs = sum(r.detail["odd_pairs"] for r in items)
    fails = [r for r in items if r.status != "pass"]
    assert pairs > 0 and not merge_report.skipped
    announce(2, not fails, f"{len(items)} perfect classes, {pairs} odd pairs merged, {len(fails)} failures")


@criterion(3, "cliques of the merged graph are cliques of G or inside the union; a Mixed pair breaks this")
def test_c03_dichotomy(merge_report):
    items = [r for r in merge_report.verdicts if r.detail.get("odd_pairs") is not None]
    dichotomy = [r for r in items if any("dichotomy" in p for f in r.detail["failures"] for p in f["problems"])]
    c5 = gen_hole(5)
    assert classify_clique_pair(c5, [0], [2]).verdict is Verdict.MIXED
    forced = classify_merged_clique(c5, [0], [2], [0, 1, 2])
    ok = not dichotomy and isinstance(forced, DichotomyFailure) and forced.path.vertices == (0, 1, 2)
    forced_item = next(r for r in merge_report.verdicts if r.item == "C5 {0},{2} forced")
    ok = ok and forced_item.status == "pass"
    announce(3, ok, f"0 dichotomy failures on odd pairs; forced failure on C5 with path {forced.path.vertices}")


@criterion(4, "line graphs of bipartite graphs split their maximal cliques into two sides; odd cycle roots fail")
def test_c04_bipartition():
    roots = [r for _, r in _random_bipartite_roots(0)]
    assert len(roots) == 100 and all(r.edge_count() <= 12 for r in roots)
    c33 = gen_complete_bipartite(3, 3)
    roots += [gen_hole(6), build_graph(6, [e for e in c33.edges() if e != (2, 5)])]
    violations = 0
    for r in roots:
        g = line_graph(r)[0]
        part = clique_bipartition(g)
        assert isinstance(part, CliqueBipartition)
        rep = verify_bipartition(g, part)
        violations += len(rep.violations) + len(rep.missing_cliques)
    odd_ok = True
    for k in (5, 7, 9):
        res = clique_bipartition(line_graph(gen_hole(k))[0])
        odd_ok &= isinstance(res, OddCliqueCycle) and len(res.cliques) % 2 == 1
    rep = cmd_verify("linegraph-bipartition", SuiteConfig(n_max=1))
    announce(4, violations == 0 and odd_ok and rep.passed,
             f"{len(roots)} bipartite roots, {violations} violations; L(C5), L(C7), L(C9) give odd clique cycles")


@criterion(5, "root graph round trip on triangle-free graphs <= 8 vertices; claw/diamond witnesses on non-line graphs <= 7")
def test_c05_line_graph_round_trip():
    rep = cmd_verify("linegraph-bipartition", SuiteConfig(n_max=7))
    trips = [r for r in rep.verdicts if r.item.startswith("root-")]
    conv = [r for r in rep.verdicts if r.item.startswith("n") and "claw_diamond_free" in r.detail]
    non_line = [r for r in conv if not r.detail["line_of_triangle_free"]]
    assert max(decode_graph6(r.graph6).n for r in trips) == 8
    assert all("witness" in r.detail for r in non_line)
    ok = rep.passed and all(r.status == "pass" for r in trips + conv)
    announce(5, ok, f"{len(trips)} round trips, {len(conv)} classes checked, {len(non_line)} non-line graphs with witnesses")


@criterion(6, "double split graphs: K_a, K_b form an odd pair of maximal cliques with paths of length 1 or 3")
def test_c06_double_split():
    count = 0
    bad = []
    for m in (2, 3):
        for n in (2, 3):
            for spec in all_double_split_specs(m, n):
                g, ka, kb = gen_double_split(spec)
                maximal = set(maximal_cliques(g))
                lengths = {p.length for p in external_paths(g, ka, kb)}
                if not (ka in maximal and kb in maximal and lengths <= {1, 3}
                        and classify_clique_pair(g, ka, kb).verdict is Verdict.ODD_PAIR):
                    bad.append((m, n, spec))
                count += 1
    assert count == 2 ** 4 + 2 * 2 ** 6 + 2 ** 9
    announce(6, not bad, f"{count} orientation matrices, {len(bad)} exceptions")


@criterion(7, "odd holes have an even external path between maximal cliques; odd antiholes one of length 2")
def test_c07_hole_antihole_facts():
    witnesses = []
    ok = True
    for k in (5, 7, 9):
        g = gen_hole(k)
        hit = next(((a, b, p) for a, b in combinations(maximal_cliques(g), 2)
                    for p in external_paths(g, a, b) if p.length % 2 == 0 and not set(a) & set(b)), None)
        ok &= hit is not None
        witnesses.append(f"C{k}: {hit[0]}-{hit[1]} via {hit[2].vertices}")
    for k in (7, 9):
        g = gen_antihole(k)
        hit = next(((a, b, p) for a, b in combinations(maximal_cliques(g), 2)
                    for p in external_paths(g, a, b) if p.length == 2), None)
        ok &= hit is not None
        witnesses.append(f"co-C{k}: {hit[0]}-{hit[1]} via {hit[2].vertices}")
    for w in witnesses:
        print("  witness", w)
    announce(7, ok, "; ".join(witnesses))


@criterion(8, "the eight partitionable-graph properties on C5, C7, C9, co-C7, co-C9")
def test_c08_bht():
    family = [(gen_hole(5), (2, 2)), (gen_hole(7), (3, 2)), (gen_hole(9), (4, 2)),
              (gen_antihole(7), (2, 3)), (gen_antihole(9), (2, 4))]
    ok = True
    for g, pq in family:
        w = find_partitionable_witness(g)
        rep = bht_report(g, w)
        ok &= (w.p, w.q) == pq and rep.all_hold and set(rep.colorings_per_vertex.values()) == {1}
    announce(8, ok, "all 8 properties hold, unique omega-colouring of every G - v")


@criterion(9, "no non-trivial odd pair of cliques with |K1|+|K2| = omega in the minimal imperfect family")
def test_c09_omega_sum():
    total = 0
    ok = True
    for g in (gen_hole(5), gen_hole(7), gen_hole(9), gen_antihole(7), gen_antihole(9)):
        rep = check_omega_sum_theorem(g)
        total += len(rep.odd_pairs)
        ok &= not rep.violations and all(r.size_sum != rep.omega for r in rep.odd_pairs)
    announce(9, ok, f"{total} non-trivial odd pairs scanned, none with size sum omega")


@criterion(10, "contracting an even pair of a perfect graph on <= 7 vertices keeps it perfect with the same chi")
def test_c10_fonlupt_uhry():
    rep = cmd_verify("fonlupt-uhry", SuiteConfig(n_max=7))
    pairs = sum(r.detail["even_pairs"] + r.detail["vacuous_even_pairs"] for r in rep.verdicts)
    # spot check a few contractions directly
    c6 = gen_hole(6)
    assert is_even_pair(c6, 0, 2).even
    h = contract_pair(c6, 0, 2)
    assert is_perfect(h).perfect and chromatic_number(h)[0] == chromatic_number(c6)[0]
    announce(10, rep.passed and pairs > 0, f"{len(rep.verdicts)} perfect classes, {pairs} even pairs contracted, 0 failures")


@criterion(11, "odd holes C5..C9 and odd antiholes up to 9 vertices have no even pair")
def test_c11_meyniel():
    graphs = [gen_hole(k) for k in (5, 7, 9)] + [gen_antihole(k) for k in (7, 9)]
    found = [find_even_pair(g) for g in graphs]
    announce(11, all(f is None for f in found), "0 even pairs in C5, C7, C9, co-C7, co-C9")


@criterion(12, "nested odd pairs give a star cutset on {ac, bd, ab}; C5 and K4 have none")
def test_c12_star_cutset():
    g = build_graph(4, [(0, 1), (2, 3), (0, 2)])  # a=0, c=1, b=2, d=3
    sc = star_cutset_from_nested_pairs(g, [0, 1], [0], [2, 3])
    found = find_star_cutset(g)
    ok = sc.center == 0 and set(sc.members) == {0, 2} and is_star_cutset(g, sc.center, sc.members)
    ok = ok and found is not None and is_star_cutset(g, found.center, found.members)
    ok = ok and find_star_cutset(gen_hole(5)) is None and find_star_cutset(gen_complete(4)) is None
    announce(12, ok, f"constructed centre {sc.center} members {sc.members}; search found {found.members}")


@criterion(13, "conjecture scans finish: struct n<=6 clean, n=7 recorded, mini up to C9 passes")
def test_c13_scans():
    from oddpair.generators import corpus

    r6 = cmd_conjecture_struct(corpus(6, 2))
    r7 = cmd_conjecture_struct(isomorphism_classes(7))
    assert not r6.skipped and not r7.skipped
    assert all(not revalidate(cx) for cx in r7.counterexamples)
    mini = cmd_conjecture_mini(4)
    assert [v.item for v in mini.verdicts] == ["C5", "C7", "C9", "co-C7", "co-C9"]
    ok = not r6.counterexamples and mini.passed
    counts7 = r7.status_counts()
    announce(13, ok, f"n<=6: {r6.corpus_size} graphs, 0 counterexamples; n=7: {counts7}, "
                     f"{len(r7.counterexamples)} counterexamples; mini passes")
