from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import bipartite_graphs, brute_induced_paths, graphs
from oddpair.berge import LK33E
from oddpair.generators import gen_complete, gen_complete_bipartite, gen_double_split, gen_hole, gen_path, DoubleSplitSpec
from oddpair.graph import GraphError, build_graph, complement
from oddpair.invariants import CapExceeded, all_cliques
from oddpair.linegraph import DIAMOND, line_graph
from oddpair.paths import (
    Verdict,
    canonical_path,
    classify_clique_pair,
    enumerate_induced_paths,
    external_paths,
    find_even_pair,
    find_odd_pair_of_maximal_cliques,
    is_even_pair,
    is_induced_path,
    is_trivial_odd_pair,
    quasi_parity_status,
)


def test_enumerate_induced_paths_examples():
    ps = enumerate_induced_paths(gen_path(4), 0, 3)
    assert [p.length for p in ps] == [3]
    ps = enumerate_induced_paths(gen_hole(5), 0, 2)
    assert sorted(p.length for p in ps) == [2, 3]
    ps = enumerate_induced_paths(gen_hole(4), 0, 2)
    assert [p.length for p in ps] == [2, 2] and len({p.vertices for p in ps}) == 2
    with pytest.raises(CapExceeded):
        enumerate_induced_paths(gen_path(20), 0, 19)


def test_canonical_direction():
    assert canonical_path((3, 2, 1)).vertices == (1, 2, 3)
    for p in enumerate_induced_paths(gen_hole(7), 5, 1):
        assert p.vertices[0] == 1 and p.vertices[-1] == 5


def test_is_even_pair_examples():
    assert is_even_pair(gen_hole(4), 0, 2).even
    res = is_even_pair(gen_hole(5), 0, 2)
    assert not res.even and res.odd_witness.vertices == (0, 4, 3, 2)
    k33 = gen_complete_bipartite(3, 3)
    assert is_even_pair(k33, 0, 1).even and not is_even_pair(k33, 0, 1).no_path
    with pytest.raises(GraphError):
        is_even_pair(gen_hole(4), 0, 1)
    with pytest.raises(GraphError):
        is_even_pair(gen_hole(4), 2, 2)


def test_disconnected_pair_is_flagged():
    g = build_graph(4, [(0, 1), (2, 3)])
    res = is_even_pair(g, 0, 2)
    assert res.even and res.no_path
    assert find_even_pair(g) is None
    assert find_even_pair(g, allow_vacuous=True) == (0, 2)


def test_external_paths_examples():
    ps = external_paths(gen_path(4), [0], [3])
    assert [p.vertices for p in ps] == [(0, 1, 2, 3)]
    ps = external_paths(gen_hole(6), [0, 1], [3, 4])
    assert sorted(p.vertices for p in ps) == [(0, 5, 4), (1, 2, 3)]
    # intersecting cliques carry the length-0 path through the common vertex
    ps = external_paths(gen_path(3), [0, 1], [1, 2])
    assert (1,) in [p.vertices for p in ps] and all(p.length == 0 for p in ps)
    with pytest.raises(GraphError):
        external_paths(gen_path(4), [0, 2], [3])


def test_classify_examples():
    assert classify_clique_pair(gen_path(4), [0], [3]).verdict is Verdict.ODD_PAIR
    assert classify_clique_pair(gen_hole(6), [0, 1], [3, 4]).verdict is Verdict.EVEN_PAIR
    cls = classify_clique_pair(gen_hole(5), [0], [2])
    assert cls.verdict is Verdict.MIXED
    assert {cls.odd_witness.length, cls.even_witness.length} == {2, 3}
    assert classify_clique_pair(gen_hole(5), [0, 1], [2, 3]).verdict is Verdict.MIXED
    g = build_graph(4, [(0, 1), (2, 3)])
    assert classify_clique_pair(g, [0, 1], [2, 3]).verdict is Verdict.NO_EXTERNAL_PATH


def test_trivial_odd_pairs():
    assert is_trivial_odd_pair(gen_complete(4), [0, 1], [2, 3])
    assert not is_trivial_odd_pair(gen_path(4), [0], [3])
    assert not is_trivial_odd_pair(DIAMOND, [0], [3])
    with pytest.raises(GraphError):
        is_trivial_odd_pair(gen_complete(4), [0, 1], [1, 2])


def test_find_even_pair_examples():
    assert find_even_pair(gen_hole(4)) == (0, 2)
    assert find_even_pair(gen_hole(5)) is None
    assert find_even_pair(LK33E) is None
    assert find_even_pair(complement(LK33E)) is None


def test_find_odd_pair_of_maximal_cliques_examples():
    g, ka, kb = gen_double_split(DoubleSplitSpec.straight(2, 2))
    hit = find_odd_pair_of_maximal_cliques(g)
    assert hit is not None and tuple(map(len, hit)) == (3, 3)
    assert classify_clique_pair(g, ka, kb).is_odd
    assert find_odd_pair_of_maximal_cliques(gen_hole(4)) == ((0, 1), (2, 3))
    assert find_odd_pair_of_maximal_cliques(gen_hole(5)) is None


def test_quasi_parity_examples():
    assert quasi_parity_status(gen_hole(6)).strict_qp
    st_ = quasi_parity_status(LK33E)
    assert not st_.qp and st_.qp_witness == tuple(range(8))
    assert quasi_parity_status(gen_complete(5)).strict_qp
    s5 = quasi_parity_status(gen_hole(5))
    assert not s5.qp and s5.witness == (0, 1, 2, 3, 4)


@given(graphs(min_n=2, max_n=7), st.data())
def test_induced_paths_match_networkx(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    assume(u != v)
    ours = enumerate_induced_paths(g, u, v)
    ref = {canonical_path(p).vertices for p in brute_induced_paths(g, u, v)}
    assert sorted(p.vertices for p in ours) == sorted(ref)
    assert all(is_induced_path(g, p.vertices) for p in ours)


def _brute_external(g, k1, k2):
    """Convention: one length-0 path per common vertex; every longer path
    runs from K1 - K2 to K2 - K1 with its interior outside both cliques."""
    s1, s2 = set(k1), set(k2)
    out = {(v,) for v in s1 & s2}
    for a in s1 - s2:
        for b in s2 - s1:
            for p in brute_induced_paths(g, a, b):
                if not set(p[1:-1]) & (s1 | s2):
                    out.add(canonical_path(p).vertices)
    return out


@given(graphs(min_n=2, max_n=7), st.data())
def test_external_paths_match_brute_force(g, data):
    cliques = all_cliques(g)
    k1 = data.draw(st.sampled_from(cliques))
    k2 = data.draw(st.sampled_from(cliques))
    ours = [p.vertices for p in external_paths(g, k1, k2)]
    assert len(ours) == len(set(ours))
    assert set(ours) == _brute_external(g, k1, k2)
    if not set(k1) & set(k2):
        # for disjoint cliques this is the literal definition: ends in each
        # clique, interior outside the union
        lit = set()
        for a in k1:
            for b in k2:
                for p in brute_induced_paths(g, a, b):
                    if not set(p[1:-1]) & (set(k1) | set(k2)):
                        lit.add(canonical_path(p).vertices)
        assert set(ours) == lit


@given(graphs(min_n=2, max_n=7), st.data())
def test_classification_symmetric_and_odd_implies_disjoint(g, data):
    cliques = all_cliques(g)
    k1 = data.draw(st.sampled_from(cliques))
    k2 = data.draw(st.sampled_from(cliques))
    a = classify_clique_pair(g, k1, k2)
    b = classify_clique_pair(g, k2, k1)
    assert a.verdict == b.verdict
    if a.verdict is Verdict.ODD_PAIR:
        assert not set(k1) & set(k2)
        assert a.odd_witness.length % 2 == 1
    if a.verdict is Verdict.MIXED:
        assert a.odd_witness.length % 2 == 1 and a.even_witness.length % 2 == 0
    lengths = {p.length % 2 for p in external_paths(g, k1, k2)}
    expected = {frozenset(): Verdict.NO_EXTERNAL_PATH, frozenset({1}): Verdict.ODD_PAIR,
                frozenset({0}): Verdict.EVEN_PAIR, frozenset({0, 1}): Verdict.MIXED}[frozenset(lengths)]
    assert a.verdict is expected


@given(graphs(min_n=2, max_n=7))
def test_even_pair_scan_consistent(g):
    pair = find_even_pair(g)
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        paths = brute_induced_paths(g, u, v)
        even = all((len(p) - 1) % 2 == 0 for p in paths)
        assert is_even_pair(g, u, v).even == even
        assert is_even_pair(g, u, v).no_path == (not paths)
    if pair is not None:
        assert is_even_pair(g, *pair).even and not is_even_pair(g, *pair).no_path


@given(bipartite_graphs(max_side=4))
def test_same_side_even_pairs_in_bipartite_graphs(b):
    comps = b.components()
    for u, v in combinations(range(b.n), 2):
        if b.has_edge(u, v):
            continue
        same_comp = any(c >> u & 1 and c >> v & 1 for c in comps)
        if same_comp:
            # within a component, parity of any path fixes the sides
            p = enumerate_induced_paths(b, u, v)[0]
            assert is_even_pair(b, u, v).even == (p.length % 2 == 0)


@given(bipartite_graphs(max_side=4))
def test_line_graph_side_verdicts(b):
    lg, labels = line_graph(b)
    assume(lg.n >= 2)
    star = {x: tuple(i for i, e in enumerate(labels) if x in e) for x in range(b.n)}
    # a proper 2-colouring of b names the sides
    colour = {}
    for comp in b.components():
        root = (comp & -comp).bit_length() - 1
        colour[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in b.neighbors(x):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
    for x, y in combinations(range(b.n), 2):
        if not star[x] or not star[y]:
            continue
        cls = classify_clique_pair(lg, star[x], star[y])
        if colour[x] == colour[y]:
            assert cls.is_odd_literal(), (x, y, cls)
        else:
            assert cls.is_even_literal(), (x, y, cls)
