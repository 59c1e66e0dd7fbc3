"""Conjecture scans over graph corpora."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable

from .berge import berge_witness, is_berge
from .generators import gen_antihole, gen_hole
from .graph import Graph, complement, decode_graph6, encode_graph6
from .invariants import CapExceeded, is_maximal_clique, is_minimal_imperfect, maximal_cliques
from .partitionable import check_omega_sum_theorem
from .paths import (
    PATH_CAP,
    Verdict,
    classify_clique_pair,
    external_paths,
    is_even_pair,
    is_induced_path,
)
from .report import FAIL, PASS, Record, ScanReport, validator

log = logging.getLogger(__name__)


# conjecture: G or its complement has an even pair or an odd pair of maximal
# cliques -------------------------------------------------------------------


def _even_pair_evidence(h: Graph, cap: int) -> tuple[tuple[int, int] | None, tuple[int, int] | None, list]:
    """First non-vacuous even pair, first vacuous one, and per-pair evidence
    (an odd path, or None when no path exists) used for counterexamples."""
    strict = vacuous = None
    evidence = []
    for u, v in combinations(range(h.n), 2):
        if h.has_edge(u, v):
            continue
        res = is_even_pair(h, u, v, cap)
        if res.even and not res.no_path:
            return (u, v), vacuous, evidence
        if res.even:
            vacuous = vacuous or (u, v)
        evidence.append([u, v, list(res.odd_witness.vertices) if res.odd_witness else None])
    return strict, vacuous, evidence


def _clique_pair_evidence(h: Graph, cap: int):
    strict = vacuous = None
    evidence = []
    for k1, k2 in combinations(maximal_cliques(h), 2):
        cls = classify_clique_pair(h, k1, k2, cap)
        if cls.verdict is Verdict.ODD_PAIR:
            return (k1, k2, cls.odd_witness), vacuous, evidence
        if cls.verdict is Verdict.NO_EXTERNAL_PATH:
            vacuous = vacuous or (k1, k2, None)
        evidence.append([list(k1), list(k2), list(cls.even_witness.vertices) if cls.even_witness else None])
    return strict, vacuous, evidence


def struct_verdict(g: Graph, cap: int = PATH_CAP, allow_vacuous: bool = False) -> tuple[str, dict, dict | None]:
    """(status, detail, counterexample record or None) for one graph."""
    if g.n < 2:
        return "trivial", {}, None
    if not is_berge(g):
        w = berge_witness(g)
        return "not-berge", {"hole": list(w.cycle), "in_complement": w.in_complement}, None
    sides = (("G", g), ("complement", complement(g)))
    vac_found = None
    evidence = {}
    for label, h in sides:
        pair, vac, ev = _even_pair_evidence(h, cap)
        if pair:
            return "satisfied", {"reason": "even-pair", "in": label, "pair": list(pair)}, None
        vac_found = vac_found or (vac and {"reason": "even-pair", "in": label, "pair": list(vac)})
        evidence[label] = {"nonadjacent_pairs": ev}
    for label, h in sides:
        hit, vac, ev = _clique_pair_evidence(h, cap)
        if hit:
            k1, k2, path = hit
            return "satisfied", {
                "reason": "odd-pair-of-maximal-cliques", "in": label,
                "k1": list(k1), "k2": list(k2), "odd_path": list(path.vertices),
            }, None
        vac_found = vac_found or (vac and {"reason": "odd-pair-of-maximal-cliques", "in": label,
                                           "k1": list(vac[0]), "k2": list(vac[1])})
        evidence[label]["maximal_clique_pairs"] = ev
    if vac_found:
        if allow_vacuous:
            return "satisfied", dict(vac_found, vacuous=True), None
        return "vacuous", vac_found, None
    record = {"kind": "conjecture-struct", "graph6": encode_graph6(g), "allow_vacuous": allow_vacuous,
              "witness": evidence}
    return "counterexample", {}, record


@validator("conjecture-struct")
def _validate_struct(record: dict) -> list[str]:
    g = decode_graph6(record["graph6"])
    problems = []
    if not is_berge(g):
        problems.append("graph is not Berge")
    for label, h in (("G", g), ("complement", complement(g))):
        ev = record["witness"][label]
        pairs = {(u, v): path for u, v, path in ev["nonadjacent_pairs"]}
        expected = {(u, v) for u, v in combinations(range(h.n), 2) if not h.has_edge(u, v)}
        if set(pairs) != expected:
            problems.append(f"{label}: evidence does not list every non-adjacent pair")
        for (u, v), path in pairs.items():
            if path is None:
                if any(c >> u & 1 and c >> v & 1 for c in h.components()):
                    problems.append(f"{label}: {u},{v} claimed unconnected but share a component")
            elif not (is_induced_path(h, path) and {path[0], path[-1]} == {u, v} and (len(path) - 1) % 2):
                problems.append(f"{label}: path {path} is not an odd induced {u}-{v} path")
        cliques = maximal_cliques(h)
        listed = {(tuple(a), tuple(b)): p for a, b, p in ev["maximal_clique_pairs"]}
        if set(listed) != set(combinations(cliques, 2)):
            problems.append(f"{label}: evidence does not list every pair of maximal cliques")
        for (k1, k2), path in listed.items():
            if path is None:
                if external_paths(h, k1, k2):
                    problems.append(f"{label}: {k1},{k2} claimed to have no external path")
                continue
            ends_ok = (path[0] in k1 and path[-1] in k2) or (path[0] in k2 and path[-1] in k1)
            inner_ok = not set(path[1:-1]) & (set(k1) | set(k2))
            if not (is_induced_path(h, path) and ends_ok and inner_ok and (len(path) - 1) % 2 == 0):
                problems.append(f"{label}: {path} is not an even external path of {k1},{k2}")
    return problems


def _struct_task(args):
    g, cap, allow_vacuous = args
    try:
        return struct_verdict(g, cap, allow_vacuous)
    except CapExceeded as exc:
        return "skipped", {"reason": str(exc)}, None


def _run_parallel(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def cmd_conjecture_struct(graphs: Iterable[Graph], cap: int = PATH_CAP, allow_vacuous: bool = False,
                          jobs: int = 1, parameters: dict | None = None) -> ScanReport:
    start = time.perf_counter()
    graphs = list(graphs)
    report = ScanReport("conjecture-struct", dict(parameters or {}, cap=cap, allow_vacuous=allow_vacuous))
    report.corpus_size = len(graphs)
    results = _run_parallel(_struct_task, [(g, cap, allow_vacuous) for g in graphs], jobs)
    for i, (g, (status, detail, cx)) in enumerate(zip(graphs, results)):
        g6 = encode_graph6(g)
        report.verdicts.append(Record(f"graph-{i}", status, g6, detail))
        report.bump("status", status)
        if status in ("satisfied", "vacuous"):
            report.bump("reason", detail["reason"] + (" (vacuous)" if status == "vacuous" or detail.get("vacuous") else ""))
        if status == "skipped":
            log.warning("graph %d (%s) skipped: %s", i, g6, detail["reason"])
            report.skipped.append({"index": i, "graph6": g6, "reason": detail["reason"]})
        if cx is not None:
            report.counterexamples.append(cx)
    report.wall_time = time.perf_counter() - start
    return report


# conjecture on minimal imperfect graphs ------------------------------------------


def minimal_imperfect_family(k_max: int) -> list[tuple[str, Graph]]:
    """Odd holes C5..C(2k_max+1) and odd antiholes of length 7..2k_max+1."""
    out = []
    for k in range(2, k_max + 1):
        out.append((f"C{2 * k + 1}", gen_hole(2 * k + 1)))
    for k in range(3, k_max + 1):
        out.append((f"co-C{2 * k + 1}", gen_antihole(2 * k + 1)))
    return out


def mini_check(g: Graph, cap: int = PATH_CAP) -> tuple[bool, dict, dict | None]:
    """No odd pair of maximal cliques; clique-pair facts for odd holes and
    antiholes; and the omega-sum theorem."""
    detail: dict = {"minimal_imperfect": is_minimal_imperfect(g)}
    odd_pairs = []
    even_example = length2_example = None
    every_even = every_length2 = True
    # witnesses prefer disjoint cliques, where the path is not a shared vertex
    pairs = sorted(combinations(maximal_cliques(g), 2), key=lambda kk: bool(set(kk[0]) & set(kk[1])))
    for k1, k2 in pairs:
        paths = external_paths(g, k1, k2, cap)
        even = next((p for p in paths if p.length % 2 == 0), None)
        p2 = next((p for p in paths if p.length == 2), None)
        if even is None:
            odd_pairs.append((k1, k2))
            every_even = False
        elif even_example is None:
            even_example = [list(k1), list(k2), list(even.vertices)]
        if p2 is None:
            every_length2 = False
        elif length2_example is None:
            length2_example = [list(k1), list(k2), list(p2.vertices)]
    detail["even_external_path"] = even_example
    detail["length2_external_path"] = length2_example
    detail["every_pair_has_even_path"] = every_even
    detail["every_pair_has_length2_path"] = every_length2
    omega = check_omega_sum_theorem(g, cap)
    detail["omega_sum"] = omega.to_json()
    is_hole = all(r.bit_count() == 2 for r in g.rows)
    fact = even_example is not None if is_hole else length2_example is not None
    detail["clique_pair_fact"] = fact
    ok = detail["minimal_imperfect"] and not odd_pairs and omega.ok and fact
    cx = None
    if odd_pairs:
        k1, k2 = odd_pairs[0]
        cx = {"kind": "conjecture-mini", "graph6": encode_graph6(g), "k1": list(k1), "k2": list(k2),
              "external_paths": [list(p.vertices) for p in external_paths(g, k1, k2, cap)]}
    return ok, detail, cx


@validator("conjecture-mini")
def _validate_mini(record: dict) -> list[str]:
    g = decode_graph6(record["graph6"])
    k1, k2 = tuple(record["k1"]), tuple(record["k2"])
    problems = []
    if not is_minimal_imperfect(g):
        problems.append("graph is not minimal imperfect")
    if not (is_maximal_clique(g, k1) and is_maximal_clique(g, k2)):
        problems.append("cliques are not maximal")
    listed = sorted(tuple(p) for p in record["external_paths"])
    actual = sorted(p.vertices for p in external_paths(g, k1, k2))
    if listed != actual:
        problems.append("listed external paths differ from the recomputed ones")
    if any((len(p) - 1) % 2 == 0 for p in listed):
        problems.append("an even external path is listed")
    return problems


def cmd_conjecture_mini(k_max: int = 4, cap: int = PATH_CAP) -> ScanReport:
    start = time.perf_counter()
    report = ScanReport("conjecture-mini", {"k_max": k_max, "cap": cap})
    family = minimal_imperfect_family(k_max)
    report.corpus_size = len(family)
    for name, g in family:
        ok, detail, cx = mini_check(g, cap)
        report.verdicts.append(Record(name, PASS if ok else FAIL, encode_graph6(g), detail))
        for (a, b), c in sorted(
            (tuple(x[:2]), x[2]) for x in detail["omega_sum"]["size_distribution"]
        ):
            report.bump("odd pair sizes", f"{a}+{b}", c)
        if cx:
            report.counterexamples.append(cx)
    report.wall_time = time.perf_counter() - start
    return report
