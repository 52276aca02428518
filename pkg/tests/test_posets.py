import itertools

import pytest

from chromsym import (
    CapExceededError,
    CycleError,
    EmptyPartitionError,
    Graph,
    Poset,
    has_stable_partition,
    incomparability_graph,
    multipartite,
    multipartite_has_stable_partition,
    multipartite_stable_partition_count,
    niceness_violation,
    partitions_of,
    poset_from_covers,
    semi_ordered_count,
    stable_partition_count,
    stable_partition_count_backtracking,
    stable_partitions,
    stable_sets,
)


def example_poset():
    """Six elements a..f with covers a<b<f, a<c<e, d<c, b<e."""
    return poset_from_covers(
        6, [(0, 1), (1, 5), (0, 2), (2, 4), (3, 2), (1, 4)], labels=list("abcdef")
    )


def test_poset_from_covers_closure():
    p = example_poset()
    a, b, c, d, e, f = (p.element(x) for x in "abcdef")
    assert p.leq(a, f)  # through b
    assert p.leq(d, e)  # through c
    assert not p.leq(d, a)
    assert p.comparable(b, e)
    assert not p.comparable(c, f)


def test_poset_cycle_detection():
    with pytest.raises(CycleError):
        poset_from_covers(2, [(0, 1), (1, 0)])
    with pytest.raises(CycleError):
        poset_from_covers(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(CycleError):
        poset_from_covers(1, [(0, 0)])


def test_poset_antichain_and_chain():
    antichain = poset_from_covers(4, [])
    assert incomparability_graph(antichain).edges() == [
        (u, v) for u in range(4) for v in range(u + 1, 4)
    ]
    chain = Poset.chain(3)
    assert incomparability_graph(chain).edges() == []


def test_incomparability_graph_of_example():
    p = example_poset()
    g = incomparability_graph(p)
    names = {i: p.label(i) for i in range(6)}
    got = sorted("".join(sorted((names[u], names[v]))) for u, v in g.edges())
    assert got == ["ad", "bc", "bd", "cf", "df", "ef"]


def test_poset_json_round_trip():
    p = example_poset()
    q = Poset.from_json(p.to_json())
    assert q.size == p.size and q.covers == p.covers and q.labels == p.labels


def test_graph_json_round_trip():
    g = Graph.from_edges(4, [(0, 2), (1, 3)])
    assert Graph.from_json(g.to_json()).edges() == g.edges()


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(CapExceededError):
        Graph.from_edges(100, [])


def test_multipartite_shapes():
    claw, _, spec = multipartite((3, 1))
    assert claw.edges() == [(0, 3), (1, 3), (2, 3)]
    assert spec.side_of == (0, 0, 0, 1)
    assert spec.rank_in_side == (0, 1, 2, 0)

    c4, poset, _ = multipartite((2, 2))
    assert c4.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert poset.leq(0, 1) and not poset.leq(0, 2)

    edgeless, _, _ = multipartite((5,))
    assert edgeless.edges() == []

    with pytest.raises(EmptyPartitionError):
        multipartite(())


def test_stable_sets():
    g32, _, _ = multipartite((3, 2))
    assert list(stable_sets(g32, 3)) == [frozenset({0, 1, 2})]
    assert list(stable_sets(g32, 0)) == [frozenset()]
    c4, _, _ = multipartite((2, 2))
    assert sorted(stable_sets(c4, 2)) == [frozenset({0, 1}), frozenset({2, 3})]


def test_stable_sets_of_multipartite_live_in_one_side():
    for n in range(1, 11):
        for lam in partitions_of(n):
            g, _, spec = multipartite(lam)
            total = 0
            for size in range(1, g.size + 1):
                for s in stable_sets(g, size):
                    total += 1
                    assert len({spec.side_of[v] for v in s}) == 1
            # conversely, every nonempty subset of a side is stable
            assert total == sum(2**part - 1 for part in lam)


def test_stable_partition_counts():
    c4, _, _ = multipartite((2, 2))
    assert stable_partition_count(c4, (2, 2)) == 1
    g32, _, _ = multipartite((3, 2))
    assert stable_partition_count(g32, (2, 2, 1)) == 3
    for lam in [(3, 2), (2, 2, 2), (4, 1)]:
        g, _, _ = multipartite(lam)
        assert stable_partition_count(g, lam) == 1
    # weight mismatch returns zero instead of raising
    assert stable_partition_count(c4, (2, 2, 2)) == 0


def test_fast_path_agrees_with_backtracking():
    for n in range(1, 11):
        for lam in partitions_of(n):
            g, _, _ = multipartite(lam)
            bare = Graph.from_edges(g.size, g.edges())
            for mu in partitions_of(n):
                fast = multipartite_stable_partition_count(lam.parts, mu.parts)
                slow = stable_partition_count_backtracking(bare, mu)
                assert fast == slow, (lam, mu)
                assert multipartite_has_stable_partition(lam.parts, mu.parts) == (
                    slow > 0
                )


def test_stable_partitions_enumerator_matches_count():
    for lam in [(2, 2), (3, 2), (2, 2, 1)]:
        g, _, _ = multipartite(lam)
        for mu in partitions_of(g.size):
            found = list(stable_partitions(g, mu))
            assert len(found) == stable_partition_count(g, mu)
            for sp in found:
                sp.validate(g)
                assert sp.type == mu
            assert len(set(found)) == len(found)


def test_semi_ordered_counts():
    c4, _, _ = multipartite((2, 2))
    assert semi_ordered_count(c4, (2, 2)) == 2
    g32, _, _ = multipartite((3, 2))
    assert semi_ordered_count(g32, (1, 1, 1, 1, 1)) == 120
    # distinct part sizes leave the count unchanged
    assert semi_ordered_count(g32, (3, 2)) == stable_partition_count(g32, (3, 2))


def test_semi_ordered_divisible_by_plain_count():
    for lam in [(2, 2), (3, 2), (2, 2, 1), (3, 1)]:
        g, _, _ = multipartite(lam)
        for mu in partitions_of(g.size):
            plain = stable_partition_count(g, mu)
            if plain:
                assert semi_ordered_count(g, mu) % plain == 0


def test_has_stable_partition():
    g, _, _ = multipartite((5, 5, 5, 4, 3, 3))
    assert has_stable_partition(g, (5, 5, 5, 4, 3, 3))
    assert not has_stable_partition(g, (5, 5, 4, 4, 4, 3))
    g2, _, _ = multipartite((6, 6, 5, 5, 5))
    assert not has_stable_partition(g2, (5, 5, 5, 5, 5, 2))
    anything, _, _ = multipartite((4, 3))
    assert has_stable_partition(anything, (1,) * 7)


def test_has_stable_partition_generic_graph():
    # 5-cycle: stable pairs are the non-adjacent ones
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert has_stable_partition(c5, (2, 2, 1))
    assert not has_stable_partition(c5, (3, 2))


def test_niceness_violation():
    g33, _, _ = multipartite((3, 3))
    assert niceness_violation(g33, (3, 3)) == (2, 2, 2)
    g, _, _ = multipartite((5, 4, 4, 4))
    assert niceness_violation(g, (5, 4, 4, 4)) == (5, 4, 3, 3, 2)
    edgeless, _, _ = multipartite((5,))
    assert niceness_violation(edgeless, (5,)) is None
    with pytest.raises(ValueError):
        niceness_violation(g33, (4, 2))


def test_niceness_violation_length_bound():
    g33, _, _ = multipartite((3, 3))
    # no dominated type of length <= 2 is missing, the violation needs 3 blocks
    assert niceness_violation(g33, (3, 3), max_length=2) is None
    assert niceness_violation(g33, (3, 3), max_length=3) == (2, 2, 2)


def test_stable_sets_count_complete_graph():
    # antichain poset gives the complete graph: only singletons are stable
    g = incomparability_graph(poset_from_covers(5, []))
    assert sum(1 for _ in stable_sets(g, 1)) == 5
    assert list(stable_sets(g, 2)) == []
    assert list(itertools.islice(stable_sets(g, 0), 5)) == [frozenset()]
