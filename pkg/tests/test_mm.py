"""Dynamic matching: oracle equivalence, reports, rank freshness, flip shape."""

import random

import pytest

from lfdyn import (
    DuplicateInsert,
    DynamicMatching,
    GraphError,
    MissingDelete,
    compute_lfmm,
    flip_shape_ok,
    generate_stream,
)
from lfdyn._kernel import available
from lfdyn.runner import verify_mm


def replay(structure, stream, on_each=None):
    for i, (op, u, v) in enumerate(stream.updates):
        report = (
            structure.insert_edge(u, v) if op == "+" else structure.delete_edge(u, v)
        )
        if on_each is not None:
            on_each(i, (op, u, v), report)


def test_frozen_small_case(kernel):
    # seed=5 edge rank order on the 4-cycle: (0,1) < (2,3) < (0,3) < (1,2)
    d = DynamicMatching(4, seed=5, kernel=kernel)
    r = d.insert_edge(0, 1)
    assert r.flipped == {(0, 1)}
    r = d.insert_edge(1, 2)
    assert r.affected == {(1, 2)} and r.flipped == set()
    r = d.insert_edge(2, 3)
    assert r.flipped == {(2, 3)}
    r = d.insert_edge(0, 3)
    assert r.affected == {(0, 3)} and r.flipped == set()
    assert d.matching() == [(0, 1), (2, 3)]
    assert d.eliminator_rank(0, 3) == d.edge_rank(0, 1)
    assert d.eliminator_rank(1, 2) == d.edge_rank(0, 1)
    rank01 = d.edge_rank(0, 1)
    r = d.delete_edge(0, 1)
    assert r.flipped == {(0, 1)}
    assert r.affected == {(0, 1), (0, 3), (1, 2)}
    assert d.matching() == [(2, 3)]
    assert d.vertex_match_rank(0) is None
    assert d.vertex_match_rank(2) == d.edge_rank(2, 3)
    assert d.eliminator_rank(0, 3) == d.edge_rank(2, 3) != rank01
    assert not verify_mm(d)


def test_oracle_equivalence_on_mixed_stream(kernel):
    stream = generate_stream("mixed", n=56, updates=550, seed=14, target_edges=170)
    d = DynamicMatching(56, seed=6, kernel=kernel)

    def check(i, update, report):
        if i % 25 == 0:
            assert not verify_mm(d), (i, update)

    replay(d, stream, check)
    assert not verify_mm(d)


@pytest.mark.parametrize("model,params", [
    ("gnp-insert", {}),
    ("sliding-window", {"window": 70}),
    ("star-flip", {"hubs": 2}),
])
def test_oracle_equivalence_other_models(kernel, model, params):
    stream = generate_stream(model, n=40, updates=300, seed=15, **params)
    d = DynamicMatching(40, seed=7, kernel=kernel)
    replay(d, stream)
    assert not verify_mm(d)


def test_reports_describe_exact_state_deltas(kernel):
    n = 32
    stream = generate_stream("mixed", n=n, updates=260, seed=19, target_edges=80)
    d = DynamicMatching(n, seed=3, kernel=kernel)
    prev_ranks = d.edge_ranks()
    prev_sol = compute_lfmm(d.graph, prev_ranks)

    def check(i, update, report):
        nonlocal prev_ranks, prev_sol
        ranks = d.edge_ranks()
        sol = compute_lfmm(d.graph, ranks)
        f = (min(update[1], update[2]), max(update[1], update[2]))
        in_both = prev_ranks.keys() & ranks.keys()
        changed = {
            e
            for e in in_both
            if prev_ranks[prev_sol.eliminator[e]] != ranks[sol.eliminator[e]]
        }
        changed.add(f)
        assert report.affected == changed, (i, update)
        assert report.flipped == prev_sol.matched ^ sol.matched, (i, update)
        assert report.flipped <= report.affected
        assert report.queue_pops >= 1
        prev_ranks, prev_sol = ranks, sol

    replay(d, stream, check)


def test_affected_edges_clear_the_update_threshold(kernel):
    # affected edges other than the updated one keep eliminator rank >= the
    # updated edge's rank on both sides of the update
    n = 36
    stream = generate_stream("mixed", n=n, updates=300, seed=23, target_edges=100)
    d = DynamicMatching(n, seed=11, kernel=kernel)
    prev_ranks = d.edge_ranks()
    prev_sol = compute_lfmm(d.graph, prev_ranks)

    def check(i, update, report):
        nonlocal prev_ranks, prev_sol
        ranks = d.edge_ranks()
        sol = compute_lfmm(d.graph, ranks)
        op, u, v = update
        f = (min(u, v), max(u, v))
        f_rank = ranks[f] if op == "+" else prev_ranks[f]
        for e in report.affected - {f}:
            assert prev_ranks[prev_sol.eliminator[e]] >= f_rank, (i, update, e)
            assert ranks[sol.eliminator[e]] >= f_rank, (i, update, e)
        prev_ranks, prev_sol = ranks, sol

    replay(d, stream, check)


def test_flipped_edges_form_a_path_or_cycle(kernel):
    stream = generate_stream("mixed", n=48, updates=500, seed=27, target_edges=140)
    d = DynamicMatching(48, seed=16, kernel=kernel)

    def check(i, update, report):
        assert flip_shape_ok(report.flipped), (i, update, sorted(report.flipped))

    replay(d, stream, check)


def test_matching_is_valid_and_maximal(kernel):
    stream = generate_stream("star-flip", n=30, updates=250, seed=31, hubs=2)
    d = DynamicMatching(30, seed=9, kernel=kernel)
    replay(d, stream)
    matched = d.matching()
    used = [v for e in matched for v in e]
    assert len(used) == len(set(used))
    matched_set = set(matched)
    for e in d.graph.edges():
        covered = e in matched_set or any(v in set(used) for v in e)
        assert covered, e


def test_history_independence_insertion_orders(kernel):
    rng = random.Random(41)
    n = 70
    edges = set()
    while len(edges) < 220:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((u, v) if u < v else (v, u))
    outcomes = []
    for perm_seed in range(3):
        order = sorted(edges)
        random.Random(perm_seed).shuffle(order)
        d = DynamicMatching(n, seed=55, kernel=kernel)
        for u, v in order:
            d.insert_edge(u, v)
        outcomes.append(
            (d.matching(), [d.vertex_match_rank(v) for v in range(n)])
        )
    assert outcomes[0] == outcomes[1] == outcomes[2]


def test_history_independence_with_detour_deletions(kernel):
    d1 = DynamicMatching(8, seed=2, kernel=kernel)
    d2 = DynamicMatching(8, seed=2, kernel=kernel)
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        d1.insert_edge(u, v)
    d2.insert_edge(4, 5)
    d2.insert_edge(1, 2)
    d2.insert_edge(0, 1)
    d2.insert_edge(2, 3)
    d2.delete_edge(4, 5)
    assert d1.matching() == d2.matching()
    assert [d1.vertex_match_rank(v) for v in range(8)] == [
        d2.vertex_match_rank(v) for v in range(8)
    ]


def test_reinsertion_draws_a_fresh_rank(kernel):
    d = DynamicMatching(4, seed=8, kernel=kernel)
    seen = []
    for _ in range(3):
        d.insert_edge(0, 1)
        seen.append(d.edge_rank(0, 1))
        d.delete_edge(0, 1)
    assert len({r.value for r in seen}) == 3
    assert [r.tiebreak for r in seen] == [(0, 1, 0), (0, 1, 1), (0, 1, 2)]
    # replays are exact: a twin fed the same updates draws the same ranks
    twin = DynamicMatching(4, seed=8, kernel=kernel)
    twin_seen = []
    for _ in range(3):
        twin.insert_edge(0, 1)
        twin_seen.append(twin.edge_rank(0, 1))
        twin.delete_edge(0, 1)
    assert twin_seen == seen


def test_strict_updates_and_absent_edge_queries(kernel):
    d = DynamicMatching(5, seed=1, kernel=kernel)
    d.insert_edge(0, 1)
    with pytest.raises(DuplicateInsert):
        d.insert_edge(1, 0)
    with pytest.raises(MissingDelete):
        d.delete_edge(2, 3)
    with pytest.raises(GraphError):
        d.is_matched(2, 3)
    with pytest.raises(GraphError):
        d.edge_rank(2, 3)
    with pytest.raises(GraphError):
        d.eliminator_rank(2, 3)
    assert not verify_mm(d)


def test_bulk_constructor_matches_incremental(kernel):
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    bulk = DynamicMatching(5, seed=12, edges=edges, kernel=kernel)
    inc = DynamicMatching(5, seed=12, kernel=kernel)
    for u, v in edges:
        inc.insert_edge(u, v)
    assert bulk.matching() == inc.matching()
    assert bulk.edge_ranks() == inc.edge_ranks()
    assert not verify_mm(bulk)


def test_kernels_report_identically():
    kernels = available()
    if len(kernels) < 2:
        pytest.skip("only one kernel installed")
    stream = generate_stream("mixed", n=52, updates=450, seed=37, target_edges=150)
    structs = [DynamicMatching(52, seed=40, kernel=k) for k in kernels]
    for op, u, v in stream.updates:
        reports = [
            (s.insert_edge(u, v) if op == "+" else s.delete_edge(u, v))
            for s in structs
        ]
        first = reports[0]
        for other in reports[1:]:
            assert other.affected == first.affected
            assert other.flipped == first.flipped
            assert other.relevant_scanned == first.relevant_scanned
            assert other.queue_pops == first.queue_pops
    matchings = {tuple(s.matching()) for s in structs}
    assert len(matchings) == 1
