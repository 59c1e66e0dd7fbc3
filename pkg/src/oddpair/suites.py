"""Named verification suites.

Each suite runs item-level checks, one record per graph or instance. A
check is a registered function ``check(g, **args) -> (passed, detail)``;
``passed`` is None for report-only findings. A failing item is stored as a
counterexample carrying the check name and arguments, so it re-validates by
running the check again on the decoded graph.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable

from .berge import (
    DOUBLE_DIAMOND,
    LK33E,
    berge_witness,
    find_star_cutset,
    is_bipartisan,
    is_star_cutset,
    star_cutset_from_nested_pairs,
)
from .generators import (
    all_double_split_specs,
    gen_antihole,
    gen_complete,
    gen_complete_bipartite,
    gen_double_split,
    gen_hole,
    gen_prism,
    gen_random_bipartite,
    isomorphism_classes,
)
from .graph import Graph, build_graph, complement, contract_pair, decode_graph6, encode_graph6
from .invariants import (
    CapExceeded,
    all_cliques,
    chromatic_number,
    clique_number,
    independence_number,
    is_maximal_clique,
    is_perfect,
    is_proper_coloring,
    lovasz_bound_holds,
    maximal_cliques,
)
from .iso import canonical_code, is_isomorphic, labeled_count
from .linegraph import (
    CliqueBipartition,
    OddCliqueCycle,
    clique_bipartition,
    is_claw_diamond_free,
    line_graph,
    root_graph,
    verify_bipartition,
)
from .merge import DichotomyFailure, NotAnOddPair, classify_merged_clique, merge_cliques, recolor_after_merge
from .partitionable import bht_report, check_omega_sum_theorem, find_partitionable_witness, scan_merge_cases
from .paths import (
    PATH_CAP,
    classify_clique_pair,
    external_paths,
    find_even_pair,
    is_even_pair,
    quasi_parity_status,
)
from .report import FAIL, PASS, REPORT, Record, ScanReport, validator
from .scans import minimal_imperfect_family


@dataclass
class SuiteConfig:
    n_max: int | None = None
    cap: int = PATH_CAP
    allow_vacuous: bool = False
    seed: int = 0
    jobs: int = 1


CHECKS: dict[str, Callable] = {}


def check(name: str):
    def register(fn):
        CHECKS[name] = fn
        return fn

    return register


def _status(passed: bool | None) -> str:
    return REPORT if passed is None else (PASS if passed else FAIL)


def _run_item(report: ScanReport, item: str, name: str, g: Graph | None, **args) -> dict:
    g6 = encode_graph6(g) if g is not None else None
    try:
        passed, detail = CHECKS[name](g, **args)
    except CapExceeded as exc:
        report.skipped.append({"item": item, "graph6": g6, "reason": str(exc)})
        report.verdicts.append(Record(item, "skipped", g6, {"reason": str(exc)}))
        return {}
    report.verdicts.append(Record(item, _status(passed), g6, detail))
    if passed is False:
        report.counterexamples.append({"kind": "suite-check", "check": name, "item": item,
                                       "graph6": g6, "args": args, "detail": detail})
    return detail


@validator("suite-check")
def _validate_suite_check(record: dict) -> list[str]:
    fn = CHECKS.get(record["check"])
    if fn is None:
        return [f"unknown check {record['check']!r}"]
    g = decode_graph6(record["graph6"]) if record["graph6"] is not None else None
    passed, _ = fn(g, **record["args"])
    return [] if passed is False else ["check no longer fails on the recorded graph"]


def _perfect(g: Graph) -> bool:
    return is_perfect(g).perfect


def _triangle_free(g: Graph) -> bool:
    return all(not (g.rows[u] & g.rows[v]) for u, v in g.edges())


def _classes_upto(n_max: int, keep=None, n_min: int = 1) -> list[tuple[str, Graph]]:
    out = []
    for n in range(n_min, n_max + 1):
        for i, g in enumerate(isomorphism_classes(n, keep)):
            out.append((f"n{n}-{i}", g))
    return out


# spgt-desk ---------------------------------------------------------------------


@check("spgt")
def check_spgt(g: Graph):
    w = berge_witness(g)
    perf = is_perfect(g)
    lov = lovasz_bound_holds(g)
    detail = {"berge": w is None, "perfect": perf.perfect, "lovasz": lov.perfect}
    if w is not None:
        detail["odd_hole"] = {"cycle": list(w.cycle), "in_complement": w.in_complement}
        detail["imperfect_subset"] = list(perf.witness)
    return (w is None) == perf.perfect == lov.perfect, detail


@check("labeled-coverage")
def check_coverage(g, n: int):
    total = sum(labeled_count(c) for c in isomorphism_classes(n))
    return total == 2 ** comb(n, 2), {"classes": len(isomorphism_classes(n)), "labeled": total}


def suite_spgt_desk(cfg: SuiteConfig, report: ScanReport) -> None:
    n_max = cfg.n_max or 7
    for n in range(0, n_max + 1):
        _run_item(report, f"coverage-n{n}", "labeled-coverage", None, n=n)
    for item, g in _classes_upto(n_max):
        d = _run_item(report, item, "spgt", g)
        if d:
            report.bump("berge by n", f"n={g.n} {'berge' if d['berge'] else 'non-berge'}")


# fonlupt-uhry ------------------------------------------------------------------


@check("fonlupt-uhry")
def check_fonlupt_uhry(g: Graph, cap: int = PATH_CAP):
    chi = chromatic_number(g)[0]
    strict = vacuous = 0
    failures = []
    for x, y in combinations(range(g.n), 2):
        if g.has_edge(x, y):
            continue
        res = is_even_pair(g, x, y, cap)
        if not res.even:
            continue
        if res.no_path:
            vacuous += 1
        else:
            strict += 1
        h = contract_pair(g, x, y)
        ok_perfect = _perfect(h)
        chi_h = chromatic_number(h)[0]
        if not ok_perfect or chi_h != chi:
            failures.append({"pair": [x, y], "contracted_perfect": ok_perfect, "chi": chi, "chi_contracted": chi_h})
    detail = {"even_pairs": strict, "vacuous_even_pairs": vacuous, "chi": chi, "failures": failures}
    return not failures, detail


def suite_fonlupt_uhry(cfg: SuiteConfig, report: ScanReport) -> None:
    for item, g in _classes_upto(cfg.n_max or 7, _perfect):
        d = _run_item(report, item, "fonlupt-uhry", g, cap=cfg.cap)
        if d:
            report.bump("even pairs contracted", f"n={g.n}", d["even_pairs"] + d["vacuous_even_pairs"])


# meyniel -----------------------------------------------------------------------


@check("meyniel")
def check_meyniel(g: Graph, cap: int = PATH_CAP, allow_vacuous: bool = False):
    pair = find_even_pair(g, cap, allow_vacuous)
    return pair is None, {"even_pair": list(pair) if pair else None}


def suite_meyniel(cfg: SuiteConfig, report: ScanReport) -> None:
    n_max = cfg.n_max or 9
    for k in range(5, n_max + 1, 2):
        _run_item(report, f"C{k}", "meyniel", gen_hole(k), cap=cfg.cap, allow_vacuous=cfg.allow_vacuous)
    for k in range(7, n_max + 1, 2):
        _run_item(report, f"co-C{k}", "meyniel", gen_antihole(k), cap=cfg.cap, allow_vacuous=cfg.allow_vacuous)


# linegraph-bipartition ---------------------------------------------------------


def _bipartition_json(part: CliqueBipartition) -> dict:
    return {"side_a": [list(c) for c in part.side_a], "side_b": [list(c) for c in part.side_b]}


@check("clique-bipartition")
def check_clique_bipartition(g: Graph, cap: int = PATH_CAP):
    part = clique_bipartition(g)
    if isinstance(part, OddCliqueCycle):
        return False, {"odd_cycle_of_cliques": [list(c) for c in part.cliques]}
    rep = verify_bipartition(g, part, cap)
    detail = dict(_bipartition_json(part), pairs_checked=rep.pairs_checked,
                  violations=[[list(v.k1), list(v.k2), v.verdict.value] for v in rep.violations],
                  missing=[list(c) for c in rep.missing_cliques])
    return rep.ok, detail


@check("odd-clique-cycle")
def check_odd_clique_cycle(g: Graph):
    part = clique_bipartition(g)
    if not isinstance(part, OddCliqueCycle):
        return False, _bipartition_json(part)
    cyc = part.cliques
    maximal = set(maximal_cliques(g))
    ok = len(cyc) % 2 == 1 and all(c in maximal for c in cyc)
    ok = ok and all(set(cyc[i]) & set(cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    return ok, {"odd_cycle_of_cliques": [list(c) for c in cyc]}


@check("lb-round-trip")
def check_lb_round_trip(r: Graph):
    lg, _ = line_graph(r)
    root = root_graph(lg).graph
    return is_isomorphic(root, r), {"line_graph": encode_graph6(lg), "root": encode_graph6(root)}


def _component_graphs(g: Graph) -> list[Graph]:
    out = []
    for comp in g.components():
        vs = [v for v in range(g.n) if comp >> v & 1]
        pos = {v: i for i, v in enumerate(vs)}
        out.append(build_graph(len(vs), [(pos[a], pos[b]) for a, b in g.edges() if comp >> a & 1]))
    return out


_LINE_CODES: dict[int, set] = {}


def _line_graph_codes(max_edges: int) -> set:
    """Canonical codes of L(R) for connected triangle-free R with at least
    one and at most ``max_edges`` edges; such R has at most max_edges + 1
    vertices."""
    if max_edges not in _LINE_CODES:
        codes = set()
        for n in range(2, max_edges + 2):
            for r in isomorphism_classes(n, _triangle_free):
                if r.is_connected() and r.edge_count() <= max_edges:
                    codes.add(canonical_code(line_graph(r)[0]))
        _LINE_CODES[max_edges] = codes
    return _LINE_CODES[max_edges]


@check("lb-converse")
def check_lb_converse(g: Graph):
    free, hit = is_claw_diamond_free(g)
    codes = _line_graph_codes(max(g.n, 1))
    is_line = all(canonical_code(c) in codes for c in _component_graphs(g))
    detail = {"claw_diamond_free": free, "line_of_triangle_free": is_line}
    if hit:
        name, emb = hit
        sub = [[i, j] for i, j in combinations(range(4), 2) if g.has_edge(emb[i], emb[j])]
        pattern = {"claw": [[0, 1], [0, 2], [0, 3]], "diamond": [[0, 1], [0, 2], [1, 2], [1, 3], [2, 3]]}[name]
        detail["witness"] = {"pattern": name, "vertices": list(emb)}
        if sub != pattern:
            return False, dict(detail, witness_error="embedding does not induce the pattern")
    return free == is_line, detail


def _random_bipartite_roots(seed: int, count: int = 100, max_edges: int = 12) -> list[tuple[str, Graph]]:
    master = random.Random(seed)
    out = []
    while len(out) < count:
        a, b = master.randint(1, 4), master.randint(1, 4)
        p = master.choice((0.3, 0.5, 0.7))
        sub = master.randrange(1 << 30)
        r, _, _ = gen_random_bipartite(a, b, p, sub)
        if r.edge_count() > max_edges:
            continue
        out.append((f"L(random-{len(out)}: a={a} b={b} p={p} seed={sub})", r))
    return out


def suite_linegraph_bipartition(cfg: SuiteConfig, report: ScanReport) -> None:
    roots = _random_bipartite_roots(cfg.seed)
    roots.append(("L(C6)", gen_hole(6)))
    c33 = gen_complete_bipartite(3, 3)
    roots.append(("L(K3,3-e)", build_graph(6, [e for e in c33.edges() if e != (2, 5)])))
    for item, r in roots:
        d = _run_item(report, item, "clique-bipartition", line_graph(r)[0], cap=cfg.cap)
        if d and "pairs_checked" in d:
            report.bump("bipartition", "pairs checked", d["pairs_checked"])
    for k in (5, 7, 9):
        _run_item(report, f"L(C{k})", "odd-clique-cycle", line_graph(gen_hole(k))[0])
    n_max = cfg.n_max or 7
    for n in range(2, n_max + 2):
        for i, r in enumerate(isomorphism_classes(n, _triangle_free)):
            if all(row for row in r.rows):
                _run_item(report, f"root-n{n}-{i}", "lb-round-trip", r)
                report.bump("round trips", f"n={n}")
    for item, g in _classes_upto(n_max):
        d = _run_item(report, item, "lb-converse", g)
        if d:
            report.bump("converse", "line graph" if d["line_of_triangle_free"] else "not a line graph")


# double-split ------------------------------------------------------------------


@check("double-split")
def check_double_split(g: Graph, ka, kb, cap: int = PATH_CAP):
    ka, kb = tuple(ka), tuple(kb)
    maximal = is_maximal_clique(g, ka) and is_maximal_clique(g, kb)
    verdict = classify_clique_pair(g, ka, kb, cap).verdict.value
    lengths = sorted({p.length for p in external_paths(g, ka, kb, cap)})
    ok = maximal and verdict == "OddPair" and set(lengths) <= {1, 3}
    return ok, {"maximal": maximal, "verdict": verdict, "lengths": lengths}


def suite_double_split(cfg: SuiteConfig, report: ScanReport) -> None:
    top = cfg.n_max or 3
    for m in range(2, top + 1):
        for n in range(2, top + 1):
            for spec in all_double_split_specs(m, n):
                g, ka, kb = gen_double_split(spec)
                code = sum(1 << (i * n + j) for i in range(m) for j in range(n) if spec.orientation[i][j])
                d = _run_item(report, f"ds-{m}x{n}-{code}", "double-split", g, ka=list(ka), kb=list(kb), cap=cfg.cap)
                for length in d.get("lengths", []):
                    report.bump("external path lengths", length)


# merge-preserves -----------------------------------------------------------------


def _odd_pairs_of_cliques(g: Graph, cap: int):
    cliques = all_cliques(g)
    for k1, k2 in combinations(cliques, 2):
        if set(k1) & set(k2):
            continue
        if classify_clique_pair(g, k1, k2, cap).is_odd_literal():
            yield k1, k2


@check("merge-preserves")
def check_merge_preserves(g: Graph, cap: int = PATH_CAP):
    omega, alpha = clique_number(g), independence_number(g)
    _, coloring = chromatic_number(g)
    pairs = 0
    failures = []
    swaps_hist: dict[int, int] = {}
    for k1, k2 in _odd_pairs_of_cliques(g, cap):
        pairs += 1
        res = merge_cliques(g, k1, k2)
        h = res.merged
        union = set(k1) | set(k2)
        want = max(omega, len(k1) + len(k2))
        problems = []
        if not _perfect(h):
            problems.append("merged graph imperfect")
        if clique_number(h) != want:
            problems.append(f"omega(merged)={clique_number(h)} != {want}")
        if independence_number(h) > alpha:
            problems.append("alpha grew")
        for k in maximal_cliques(h):
            if not g.is_clique(k) and not set(k) <= union:
                problems.append(f"clique {list(k)} breaks the dichotomy")
        try:
            rc = recolor_after_merge(g, coloring, k1, k2, check_pair=False, cap=cap)
            colors = rc.coloring.colors
            if not is_proper_coloring(h, colors):
                problems.append("recolouring improper")
            if rc.coloring.palette_size != want or chromatic_number(h)[0] != want:
                problems.append("palette size differs from max(omega, |K1|+|K2|) or chi(merged)")
            if len(rc.trace) > min(len(k1), len(k2)):
                problems.append(f"{len(rc.trace)} Kempe swaps exceed min(|K1|,|K2|)")
            swaps_hist[len(rc.trace)] = swaps_hist.get(len(rc.trace), 0) + 1
        except NotAnOddPair as exc:
            problems.append(f"Kempe obstruction: {exc}")
        if problems:
            failures.append({"k1": list(k1), "k2": list(k2), "problems": problems})
    return not failures, {"odd_pairs": pairs, "kempe_swaps": swaps_hist, "failures": failures[:5]}


@check("forced-dichotomy-failure")
def check_forced_dichotomy(g: Graph, k1, k2, k):
    res = classify_merged_clique(g, k1, k2, k)
    if isinstance(res, DichotomyFailure):
        v1, v, v2 = res.path.vertices
        ok = g.has_edge(v1, v) and g.has_edge(v, v2) and not g.has_edge(v1, v2)
        return ok, {"path": list(res.path.vertices), "verdict": classify_clique_pair(g, k1, k2).verdict.value}
    return False, {"case": res.value}


def suite_merge_preserves(cfg: SuiteConfig, report: ScanReport) -> None:
    for item, g in _classes_upto(cfg.n_max or 7, _perfect):
        d = _run_item(report, item, "merge-preserves", g, cap=cfg.cap)
        for swaps, count in d.get("kempe_swaps", {}).items():
            report.bump("kempe swaps per merge", swaps, count)
    _run_item(report, "C5 {0},{2} forced", "forced-dichotomy-failure", gen_hole(5), k1=[0], k2=[2], k=[0, 1, 2])


# bht / omega-sum -----------------------------------------------------------------


@check("bht")
def check_bht(g: Graph, p: int, q: int):
    w = find_partitionable_witness(g)
    if w is None:
        return False, {"witness": None}
    rep = bht_report(g, w)
    detail = rep.to_json()
    return (w.p, w.q) == (p, q) and rep.all_hold, detail


@check("omega-sum")
def check_omega_sum(g: Graph, cap: int = PATH_CAP):
    rep = check_omega_sum_theorem(g, cap)
    cases = scan_merge_cases(g, cap)
    detail = rep.to_json()
    detail["below_omega"] = [
        {"k1": list(r.k1), "k2": list(r.k2), "destroyed": len(r.destroyed), "merged_partitionable": r.merged_partitionable}
        for r in cases.below
    ]
    detail["above_omega"] = [
        {"k1": list(r.k1), "k2": list(r.k2), "unique_max_clique": r.ok} for r in cases.above
    ]
    detail["alpha_growth"] = [[list(a), list(b)] for a, b in cases.alpha_growth]
    return rep.ok and cases.ok, detail


def _bht_family(cfg: SuiteConfig):
    k_max = ((cfg.n_max or 9) - 1) // 2
    for name, g in minimal_imperfect_family(k_max):
        omega, alpha = clique_number(g), independence_number(g)
        yield name, g, alpha, omega


def suite_bht(cfg: SuiteConfig, report: ScanReport) -> None:
    for name, g, alpha, omega in _bht_family(cfg):
        _run_item(report, f"{name} (p,q)=({alpha},{omega})", "bht", g, p=alpha, q=omega)


def suite_omega_sum(cfg: SuiteConfig, report: ScanReport) -> None:
    for name, g, _, _ in _bht_family(cfg):
        d = _run_item(report, name, "omega-sum", g, cap=cfg.cap)
        for a, b, c in d.get("size_distribution", []):
            report.bump("odd pair sizes", f"{name} {a}+{b}", c)


# star-cutset -------------------------------------------------------------------


@check("star-cutset-nested")
def check_star_nested(g: Graph, k1, k1_sub, k2, cap: int = PATH_CAP):
    sc = star_cutset_from_nested_pairs(g, k1, k1_sub, k2, cap)
    found = find_star_cutset(g)
    ok = is_star_cutset(g, sc.center, sc.members) and found is not None and is_star_cutset(g, found.center, found.members)
    return ok, {"constructed": sc.to_json(), "found": found.to_json() if found else None}


@check("no-star-cutset")
def check_no_star(g: Graph):
    found = find_star_cutset(g)
    return found is None, {"found": found.to_json() if found else None}


@check("star-cutset-lemma")
def check_star_lemma(g: Graph, cap: int = PATH_CAP):
    """Every nested odd configuration yields a verified star cutset."""
    maximal = set(maximal_cliques(g))
    cliques = all_cliques(g)
    odd = {}
    instances = 0
    failures = []
    for k2 in maximal:
        for k1 in cliques:
            if set(k1) & set(k2):
                continue
            if (k1, k2) not in odd:
                odd[(k1, k2)] = classify_clique_pair(g, k1, k2, cap).is_odd
            if not odd[(k1, k2)]:
                continue
            for r in range(1, len(k1)):
                for sub in combinations(k1, r):
                    if (sub, k2) not in odd:
                        odd[(sub, k2)] = classify_clique_pair(g, sub, k2, cap).is_odd
                    if not odd[(sub, k2)]:
                        continue
                    instances += 1
                    sc = star_cutset_from_nested_pairs(g, k1, sub, k2, cap)
                    if not is_star_cutset(g, sc.center, sc.members):
                        failures.append([list(k1), list(sub), list(k2)])
    return not failures, {"instances": instances, "failures": failures[:5]}


def suite_star_cutset(cfg: SuiteConfig, report: ScanReport) -> None:
    # a=0, c=1, b=2, d=3
    g = build_graph(4, [(0, 1), (2, 3), (0, 2)])
    _run_item(report, "nested {ac,bd,ab}", "star-cutset-nested", g, k1=[0, 1], k1_sub=[0], k2=[2, 3], cap=cfg.cap)
    _run_item(report, "C5", "no-star-cutset", gen_hole(5))
    _run_item(report, "K4", "no-star-cutset", gen_complete(4))
    for item, h in _classes_upto(cfg.n_max or 6):
        d = _run_item(report, item, "star-cutset-lemma", h, cap=cfg.cap)
        if d.get("instances"):
            report.bump("nested instances", f"n={h.n}", d["instances"])


# report-only suites ----------------------------------------------------------------


@check("bipartisan-qp")
def check_bipartisan_qp(g: Graph):
    ok, hit = is_bipartisan(g)
    if not ok:
        return None, {"bipartisan": False, "obstruction": hit}
    st = quasi_parity_status(g)
    return None, {"bipartisan": True, "quasi_parity": st.qp, "strict_quasi_parity": st.strict_qp,
                  "qp_witness": list(st.qp_witness) if st.qp_witness else None}


def suite_bipartisan_qp(cfg: SuiteConfig, report: ScanReport) -> None:
    items = _classes_upto(cfg.n_max or 6)
    items += [("double-diamond", DOUBLE_DIAMOND), ("L(K3,3-e)", LK33E)]
    for item, g in items:
        d = _run_item(report, item, "bipartisan-qp", g)
        if not d:
            continue
        if not d["bipartisan"]:
            report.bump("class", "not bipartisan")
        else:
            report.bump("class", "bipartisan, quasi-parity" if d["quasi_parity"] else "bipartisan, NOT quasi-parity")
            if not d["quasi_parity"]:
                report.counterexamples.append({"kind": "bipartisan-not-qp", "item": item,
                                               "graph6": encode_graph6(g), "subset": d["qp_witness"]})


@validator("bipartisan-not-qp")
def _validate_bipartisan(record: dict) -> list[str]:
    from .graph import induced_subgraph

    g = decode_graph6(record["graph6"])
    h, _ = induced_subgraph(g, record["subset"])
    problems = []
    if not is_bipartisan(g)[0]:
        problems.append("graph is not bipartisan")
    if find_even_pair(h, allow_vacuous=True) or find_even_pair(complement(h), allow_vacuous=True):
        problems.append("subgraph has an even pair in itself or its complement")
    return problems


def _three_connected(g: Graph) -> bool:
    if g.n < 4 or not g.is_connected():
        return False
    full = g.vertex_mask
    for a, b in combinations(range(g.n), 2):
        rest = full & ~(1 << a | 1 << b)
        if len(g.components(rest)) != 1:
            return False
    return True


def _hougardy_family() -> list[tuple[str, Graph]]:
    cube = build_graph(8, [(u, u ^ (1 << k)) for u in range(8) for k in range(3) if u < u ^ (1 << k)])
    wheel = build_graph(5, [(0, i) for i in range(1, 5)] + [(1, 2), (2, 3), (3, 4), (4, 1)])
    return [
        ("K4", gen_complete(4)),
        ("K5", gen_complete(5)),
        ("W4", wheel),
        ("K3,3", gen_complete_bipartite(3, 3)),
        ("prism", gen_prism(1, 1, 1)),
        ("octahedron", complement(build_graph(6, [(0, 1), (2, 3), (4, 5)]))),
        ("cube", cube),
    ]


@check("hougardy")
def check_hougardy(r: Graph, cap: int = PATH_CAP):
    lg, labels = line_graph(r)
    detail = {"three_connected": _three_connected(r), "line_graph": encode_graph6(lg)}
    for label, h in (("L", lg), ("complement", complement(lg))):
        pair = find_even_pair(h, cap)
        detail[f"even_pair_in_{label}"] = list(pair) if pair else None
        if pair:
            detail[f"even_pair_in_{label}_edges"] = [list(labels[pair[0]]), list(labels[pair[1]])]
    return None, detail


def suite_hougardy(cfg: SuiteConfig, report: ScanReport) -> None:
    for item, r in _hougardy_family():
        d = _run_item(report, f"L({item})", "hougardy", r, cap=cfg.cap)
        if d:
            found = d["even_pair_in_L"] is not None or d["even_pair_in_complement"] is not None
            report.bump("even pair found", "yes" if found else "no")


SUITES: dict[str, tuple[Callable[[SuiteConfig, ScanReport], None], str]] = {
    "fonlupt-uhry": (suite_fonlupt_uhry, "contracting an even pair of a perfect graph keeps it perfect with the same chi"),
    "meyniel": (suite_meyniel, "odd holes and antiholes have no even pair"),
    "spgt-desk": (suite_spgt_desk, "Berge = perfect = Lovasz bound on every small graph"),
    "linegraph-bipartition": (suite_linegraph_bipartition, "clique bipartition of bipartite line graphs and root-graph round trips"),
    "double-split": (suite_double_split, "the two special cliques of a double split graph form an odd pair"),
    "merge-preserves": (suite_merge_preserves, "merging an odd pair of cliques keeps a graph perfect"),
    "bht": (suite_bht, "the eight partitionable-graph properties"),
    "omega-sum": (suite_omega_sum, "no non-trivial odd pair has |K1|+|K2| = omega in a minimal imperfect graph"),
    "star-cutset": (suite_star_cutset, "nested odd pairs force a star cutset"),
    "bipartisan-qp": (suite_bipartisan_qp, "report: quasi-parity of bipartisan graphs"),
    "hougardy-exploratory": (suite_hougardy, "report: even pairs in line graphs of 3-connected graphs"),
}


def cmd_verify(name: str, cfg: SuiteConfig | None = None) -> ScanReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or SuiteConfig()
    start = time.perf_counter()
    params = {"suite": name, "n_max": cfg.n_max, "cap": cfg.cap, "allow_vacuous": cfg.allow_vacuous, "seed": cfg.seed}
    report = ScanReport("verify", params)
    SUITES[name][0](cfg, report)
    report.corpus_size = len(report.verdicts)
    report.wall_time = time.perf_counter() - start
    return report
