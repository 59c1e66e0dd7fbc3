from itertools import combinations

import pytest
from hypothesis import given

from conftest import brute_chi, brute_omega, graphs
from oddpair.generators import gen_hole, gen_path, isomorphism_classes
from oddpair.graph import GraphError, build_graph
from oddpair.invariants import (
    all_cliques,
    chromatic_number,
    clique_number,
    independence_number,
    is_perfect,
    is_proper_coloring,
)
from oddpair.merge import (
    DichotomyFailure,
    MergedCliqueCase,
    NotAnOddPair,
    classify_merged_clique,
    merge_cliques,
    recolor_after_merge,
)
from oddpair.paths import classify_clique_pair


def test_merge_examples():
    res = merge_cliques(gen_path(4), [0], [3])
    assert res.merged == gen_hole(4) and res.added_edges == ((0, 3),)
    two = build_graph(4, [(0, 1), (2, 3)])
    res = merge_cliques(two, [0, 1], [2, 3])
    assert res.merged.is_clique(range(4)) and len(res.added_edges) == 4
    res = merge_cliques(gen_hole(6), [0, 1], [3, 4])
    assert res.added_edges == ((0, 3), (0, 4), (1, 3), (1, 4))
    assert set(res.merged.edges()) == set(gen_hole(6).edges()) | set(res.added_edges)


def test_merge_is_idempotent_and_validates():
    res = merge_cliques(gen_hole(6), [0, 1], [3, 4])
    again = merge_cliques(res.merged, [0, 1], [3, 4])
    assert again.merged == res.merged and again.added_edges == ()
    with pytest.raises(GraphError, match="overlap"):
        merge_cliques(gen_path(4), [0, 1], [1, 2])
    with pytest.raises(GraphError, match="clique"):
        merge_cliques(gen_path(4), [0, 2], [3])


def test_classify_merged_clique_examples():
    p4 = gen_path(4)
    assert classify_merged_clique(p4, [0], [3], [0, 3]) is MergedCliqueCase.INSIDE_UNION
    assert classify_merged_clique(p4, [0], [3], [1, 2]) is MergedCliqueCase.CLIQUE_OF_G
    res = classify_merged_clique(gen_hole(5), [0], [2], [0, 1, 2])
    assert isinstance(res, DichotomyFailure) and res.path.vertices == (0, 1, 2)
    with pytest.raises(GraphError):
        classify_merged_clique(p4, [0], [3], [0, 2])


def test_recolor_p4():
    p4 = gen_path(4)
    _, col = chromatic_number(p4)
    res = recolor_after_merge(p4, col, [0], [3])
    assert is_proper_coloring(res.merged, res.coloring.colors)
    assert res.coloring.palette_size == 2 and res.trace == []
    assert res.merged == gen_hole(4)


def test_recolor_single_kempe_swap():
    # P4 plus a vertex seeing 1 and 2; 0 and 3 share colour 0 at the start
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])
    assert classify_clique_pair(g, [0], [3]).is_odd
    res = recolor_after_merge(g, (0, 1, 2, 0, 0), [0], [3])
    assert len(res.trace) == 1
    swap = res.trace[0]
    assert (swap.red, swap.blue, swap.component) == (0, 1, (0, 1, 4))
    assert is_proper_coloring(res.merged, res.coloring.colors)
    assert res.coloring.palette_size == 3 == chromatic_number(res.merged)[0]
    assert swap.to_json() == {"colors": [0, 1], "component": [0, 1, 4]}


def test_recolor_fresh_colours():
    two = build_graph(4, [(0, 1), (2, 3)])
    res = recolor_after_merge(two, (0, 1, 0, 1), [0, 1], [2, 3])
    assert res.fresh == {0: 2, 1: 3}
    assert res.coloring.palette_size == 4 and is_proper_coloring(res.merged, res.coloring.colors)


def test_recolor_rejects_even_pair():
    c6 = gen_hole(6)
    col = (0, 1, 0, 1, 0, 1)
    with pytest.raises(NotAnOddPair) as exc:
        recolor_after_merge(c6, col, [0, 1], [3, 4])
    assert exc.value.witness.length == 2
    # without the guard the fresh colours happen to clear every repeat
    res = recolor_after_merge(c6, col, [0, 1], [3, 4], check_pair=False)
    assert res.trace == [] and is_proper_coloring(res.merged, res.coloring.colors)


def test_kempe_obstruction_yields_even_path():
    # C6 with K1={0}, K2={2}: same colour, and the only absent colour's
    # component from 0 runs 0-1-2
    c6 = gen_hole(6)
    with pytest.raises(NotAnOddPair) as exc:
        recolor_after_merge(c6, (0, 1, 0, 1, 0, 1), [0], [2], check_pair=False)
    w = exc.value.witness.vertices
    assert (w[0], w[-1]) == (0, 2) and (len(w) - 1) % 2 == 0


def test_recolor_input_validation():
    p4 = gen_path(4)
    with pytest.raises(GraphError):
        recolor_after_merge(p4, (0, 0, 1, 0), [0], [3])
    with pytest.raises(GraphError):
        recolor_after_merge(p4, (0, 2, 0, 2), [0], [3])


def _odd_pairs(g):
    for k1, k2 in combinations(all_cliques(g), 2):
        if not set(k1) & set(k2) and classify_clique_pair(g, k1, k2).is_odd_literal():
            yield k1, k2


@pytest.mark.parametrize("n", range(2, 7))
def test_merge_preserves_perfection(n):
    for g in isomorphism_classes(n):
        if not is_perfect(g).perfect:
            continue
        omega, alpha = clique_number(g), independence_number(g)
        _, col = chromatic_number(g)
        for k1, k2 in _odd_pairs(g):
            res = merge_cliques(g, k1, k2)
            h = res.merged
            want = max(omega, len(k1) + len(k2))
            assert is_perfect(h).perfect
            assert brute_omega(h) == want
            assert independence_number(h) <= alpha
            for k in all_cliques(h):
                case = classify_merged_clique(g, k1, k2, k)
                assert case in (MergedCliqueCase.CLIQUE_OF_G, MergedCliqueCase.INSIDE_UNION)
            rc = recolor_after_merge(g, col, k1, k2)
            assert is_proper_coloring(h, rc.coloring.colors)
            assert rc.coloring.palette_size == want == brute_chi(h)
            assert len(rc.trace) <= min(len(k1), len(k2))


@given(graphs(min_n=2, max_n=7))
def test_kempe_swaps_reduce_repeats(g):
    if not is_perfect(g).perfect:
        return
    _, col = chromatic_number(g)
    for k1, k2 in _odd_pairs(g):
        rc = recolor_after_merge(g, col, k1, k2)
        colours = list(col.colors)
        for v, c in rc.fresh.items():
            colours[v] = c

        def repeats(cs):
            return sum(1 for a in k1 for b in k2 if cs[a] == cs[b])

        before = repeats(colours)
        for swap in rc.trace:
            for v in swap.component:
                colours[v] = swap.blue if colours[v] == swap.red else swap.red
            after = repeats(colours)
            assert after < before
            before = after
        assert tuple(colours) == rc.coloring.colors and before == 0
