from __future__ import annotations

import pytest
from hypothesis import given

from ssdgraph.decomp import (
    Kind,
    MinRsPath,
    classify,
    complement_of,
    gen_minrs_without_root,
    is_minrs_disjoint,
    maxpss_all,
    maxpss_all_maxpss_disjoint,
    maxpss_all_minrs_disjoint,
    maxpss_of_any_digraph,
    scan_minrs,
)
from ssdgraph.dominators import build_pair
from ssdgraph.errors import NotStronglyConnectedError, PreconditionError
from ssdgraph.graph import Digraph, complete_digraph, directed_cycle, directed_path
from ssdgraph.oracle import (
    brute_classify,
    brute_maxpss_masks,
    brute_minrs_masks,
    brute_solutions,
    is_partition,
    pairwise_disjoint,
    to_mask,
)

from .conftest import strong_digraphs

V = frozenset(range(9))


def _sets(family):
    return sorted(sorted(x) for x in family)


def test_nine_minrs_from_s(nine):
    paths = gen_minrs_without_root(nine, 0)
    assert [p.vertices for p in paths] == [(2, 3, 4), (5, 6)]
    # v8 is a leaf of the forward tree but lies in no MinRS
    assert all(8 not in p for p in paths)


def test_cycle_minrs_is_the_rest_in_cycle_order():
    assert [p.vertices for p in gen_minrs_without_root(directed_cycle(6), 0)] == [(1, 2, 3, 4, 5)]


def test_complete_minrs_are_singletons():
    assert [p.vertices for p in gen_minrs_without_root(complete_digraph(4), 0)] == [(1,), (2,), (3,)]


def test_complements(nine):
    scan = scan_minrs(nine, 0)
    assert complement_of(scan, 1) == V - {5, 6}
    assert complement_of(scan, MinRsPath((2, 3, 4))) == V - {2, 3, 4}
    cyc = scan_minrs(directed_cycle(3), 0)
    assert complement_of(cyc, 0) == {0}
    k4 = scan_minrs(complete_digraph(4), 0)
    assert complement_of(k4, MinRsPath((2,))) == {0, 1, 3}
    with pytest.raises(PreconditionError):
        complement_of(k4, MinRsPath((0,)))
    with pytest.raises(PreconditionError):
        complement_of(k4, 5)


def test_is_minrs_disjoint_examples(nine):
    ok, found = is_minrs_disjoint(nine)
    assert ok and [p.vertices for p in found] == [(2, 3, 4), (5, 6)]
    for n in range(3, 8):
        assert not is_minrs_disjoint(directed_cycle(n))[0]
    ok, found = is_minrs_disjoint(directed_cycle(2))
    assert ok and [p.vertices for p in found] == [(1,), (0,)]


def test_classify_examples(nine):
    assert classify(directed_cycle(2)).kind is Kind.BOTH
    assert classify(directed_cycle(5)).kind is Kind.MAXPSS_DISJOINT
    assert classify(nine).kind is Kind.MINRS_DISJOINT
    assert Kind.BOTH.maxpss_disjoint and Kind.BOTH.minrs_disjoint


def test_classify_preconditions():
    with pytest.raises(PreconditionError):
        classify(Digraph.from_arcs(1, []))
    with pytest.raises(NotStronglyConnectedError):
        classify(directed_path(3))


def test_maxpss_minrs_disjoint_examples(nine):
    assert _sets(maxpss_all_minrs_disjoint(nine)) == _sets([V - {2, 3, 4}, V - {5, 6}, V - {0}])
    assert _sets(maxpss_all_minrs_disjoint(complete_digraph(3))) == [[0, 1], [0, 2], [1, 2]]
    assert _sets(maxpss_all_minrs_disjoint(directed_cycle(2))) == [[0], [1]]


def test_maxpss_maxpss_disjoint_examples():
    assert maxpss_all_maxpss_disjoint(directed_cycle(4)) == [{0}, {1}, {2}, {3}]
    assert _sets(maxpss_all_maxpss_disjoint(directed_cycle(2))) == [[0], [1]]
    with pytest.raises(PreconditionError):
        maxpss_all_maxpss_disjoint(complete_digraph(3))


def test_maxpss_all_dispatch(nine):
    c, xs = maxpss_all(nine)
    assert c.kind is Kind.MINRS_DISJOINT
    # discovery order: complements of the root scan, then the MinRS holding the root
    assert xs == [V - {2, 3, 4}, V - {5, 6}, V - {0}]
    assert maxpss_all(Digraph.from_arcs(1, [])) == (None, [])


def test_maxpss_of_any_digraph(nine):
    assert maxpss_of_any_digraph(directed_path(3)) == [{0}, {1}, {2}]
    assert len(maxpss_of_any_digraph(nine)) == 3
    two = Digraph.from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)])
    brute = brute_maxpss_masks(brute_solutions(two), 0b1111)
    assert sorted(to_mask(x) for x in maxpss_of_any_digraph(two)) == brute == [0b0011, 0b1100]


def _assert_path_invariants(g: Digraph, p: MinRsPath, root: int) -> None:
    vs = p.vertices
    ys = set(vs)
    for a, b in zip(vs, vs[1:]):
        assert g.has_arc(a, b)
    for i, a in enumerate(vs):
        for b in vs[i + 2 :]:
            assert not g.has_arc(a, b)
    entries = {v for v in ys if any(u not in ys for u in g.in_adj[v])}
    exits = {v for v in ys if any(w not in ys for w in g.out_adj[v])}
    assert entries == {vs[0]} and exits == {vs[-1]}
    pair = build_pair(g, root)
    for a, b in zip(vs, vs[1:]):
        assert pair.forward.parent[b] == a
        assert pair.backward.parent[a] == b


@given(strong_digraphs(max_n=8))
def test_minrs_paths_match_brute_for_every_root(g):
    system = brute_solutions(g)
    full = (1 << g.n) - 1
    brute = brute_minrs_masks(system, full)
    for s in range(g.n):
        paths = gen_minrs_without_root(g, s)
        assert sorted(to_mask(p.vertices) for p in paths) == [y for y in brute if not y >> s & 1]
        assert pairwise_disjoint([to_mask(p.vertices) for p in paths])
        for p in paths:
            _assert_path_invariants(g, p, s)


@given(strong_digraphs(max_n=8))
def test_classify_and_maxpss_match_brute(g):
    system = brute_solutions(g)
    full = (1 << g.n) - 1
    c, xs = maxpss_all(g)
    masks = [to_mask(x) for x in xs]
    assert len(set(masks)) == len(masks)
    assert sorted(masks) == brute_maxpss_masks(system, full)
    maxpss_disj, minrs_disj = brute_classify(system, full)
    assert (c.kind.maxpss_disjoint, c.kind.minrs_disjoint) == (maxpss_disj, minrs_disj)
    if c.kind is Kind.BOTH:
        ys = brute_minrs_masks(system, full)
        assert len(ys) == 2 and is_partition(ys, full)
    if c.kind.maxpss_disjoint:
        assert is_partition(masks, full)


@given(strong_digraphs(max_n=8))
def test_some_minrs_avoids_every_vertex(g):
    ys = brute_minrs_masks(brute_solutions(g), (1 << g.n) - 1)
    assert len(ys) >= 2
    for v in range(g.n):
        assert any(not y >> v & 1 for y in ys)


@given(strong_digraphs(max_n=8))
def test_singleton_removable_set_forces_minrs_disjoint(g):
    system = brute_solutions(g)
    full = (1 << g.n) - 1
    if any(full & ~(1 << v) in system.solution_set for v in range(g.n)):
        assert classify(g).kind.minrs_disjoint
