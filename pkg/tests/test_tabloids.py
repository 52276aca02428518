from collections import defaultdict

import pytest

from chromsym import (
    Diagram,
    NoAscentError,
    OrderIncompatibleError,
    Partition,
    Poset,
    RimHook,
    SizeMismatchError,
    check_srh_g_tabloid,
    count_srh_tabloids,
    enumerate_srh_g_tabloids,
    enumerate_srh_tabloids,
    incomparability_graph,
    multipartite,
    partitions_of,
    poset_from_covers,
    psi_involution,
    render_ascii,
    signed_g_tabloid_counts,
    sort_to_partition,
    tail_head_split,
)


def example_poset():
    return poset_from_covers(
        6, [(0, 1), (1, 5), (0, 2), (2, 4), (3, 2), (1, 4)], labels=list("abcdef")
    )


def test_rim_hook_geometry():
    hook = RimHook([(3, 1), (3, 2), (2, 2), (1, 2), (1, 3)])
    assert hook.steps == "ENNE"
    assert hook.n_steps == 2
    assert hook.length == 5
    with pytest.raises(ValueError):
        RimHook([(1, 2), (1, 3)])  # misses column 1
    with pytest.raises(ValueError):
        RimHook([(1, 1), (3, 1)])  # not a unit step
    with pytest.raises(ValueError):
        RimHook([(1, 1), (2, 1)])  # steps must go north, not south


def test_census_422():
    tabloids = enumerate_srh_tabloids((4, 2, 2))
    assert len(tabloids) == 6
    assert sum(1 for t in tabloids if t.sign < 0) == 3
    got = sorted((tuple(t.content), t.sign) for t in tabloids)
    assert got == [
        ((2, 2, 4), 1),
        ((2, 5, 1), -1),
        ((3, 1, 4), -1),
        ((3, 5), 1),
        ((6, 1, 1), 1),
        ((6, 2), -1),
    ]
    for t in tabloids:
        t.validate()


def test_census_21():
    tabloids = enumerate_srh_tabloids((2, 1))
    got = sorted((tuple(t.content), t.sign) for t in tabloids)
    assert got == [((1, 2), 1), ((3,), -1)]


def test_single_column_census():
    # single columns tile like compositions: one tabloid per composition of n
    for n in range(1, 7):
        tabloids = enumerate_srh_tabloids((1,) * n)
        assert len(tabloids) == 2 ** (n - 1)
        contents = {tuple(t.content) for t in tabloids}
        assert len(contents) == len(tabloids)
        for t in tabloids:
            t.validate()
            assert t.sign == (-1) ** (n - len(t.content))


def test_every_hook_reaches_column_one_and_tiles_exactly():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for t in enumerate_srh_tabloids(lam):
                cells = [c for h in t.hooks for c in h.cells]
                assert len(cells) == n
                assert set(cells) == Diagram(lam).cells
                for h in t.hooks:
                    assert h.cells[0][1] == 1
                assert t.content.n == n
                bottoms = [h.cells[0][0] for h in t.hooks]
                assert bottoms == sorted(bottoms, reverse=True)


def test_count_matches_enumeration():
    for n in range(7):
        for lam in partitions_of(n):
            assert count_srh_tabloids(lam) == len(enumerate_srh_tabloids(lam))


def test_render_ascii():
    tabloids = enumerate_srh_tabloids((2, 1))
    by_content = {tuple(t.content): t for t in tabloids}
    assert render_ascii(by_content[(1, 2)]) == "bb\na"
    assert render_ascii(by_content[(3,)]) == "aa\na"


def test_validate_rejects_bad_tilings():
    from chromsym import SRHTabloid

    # two hooks covering the same cell
    bad = SRHTabloid((2, 1), [RimHook([(2, 1)]), RimHook([(2, 1), (1, 1), (1, 2)])])
    with pytest.raises(ValueError):
        bad.validate()
    # hooks listed top row first: removing row 1 strands row 2
    bad = SRHTabloid((2, 2), [RimHook([(1, 1), (1, 2)]), RimHook([(2, 1), (2, 2)])])
    with pytest.raises(ValueError):
        bad.validate()
    # hooks that do not cover the shape
    bad = SRHTabloid((2, 1), [RimHook([(2, 1)])])
    with pytest.raises(ValueError):
        bad.validate()
    # a hook off the column-1 requirement cannot even be built
    with pytest.raises(ValueError):
        RimHook([(2, 2)])


def test_checker_rejects_bad_fillings():
    from chromsym import SRHGTabloid, SRHTabloid

    g, p, _ = multipartite((2, 2))
    tiling = SRHTabloid(
        (2, 2), [RimHook([(2, 1), (2, 2)]), RimHook([(1, 1), (1, 2)])]
    )
    # decreasing along a hook
    bad = SRHGTabloid(tiling, {(2, 1): 1, (2, 2): 0, (1, 1): 2, (1, 2): 3})
    with pytest.raises(ValueError):
        check_srh_g_tabloid(bad, g, p)
    # adjacent vertices sharing a hook
    bad = SRHGTabloid(tiling, {(2, 1): 0, (2, 2): 2, (1, 1): 1, (1, 2): 3})
    with pytest.raises(ValueError):
        check_srh_g_tabloid(bad, g, p)
    # not a bijection
    bad = SRHGTabloid(tiling, {(2, 1): 0, (2, 2): 1, (1, 1): 2, (1, 2): 2})
    with pytest.raises(ValueError):
        check_srh_g_tabloid(bad, g, p)
    # the honest filling passes
    good = SRHGTabloid(tiling, {(2, 1): 0, (2, 2): 1, (1, 1): 2, (1, 2): 3})
    check_srh_g_tabloid(good, g, p)


def test_tabloid_json():
    t = enumerate_srh_tabloids((2, 1))[0]
    data = t.to_json()
    assert set(data) == {"shape", "hooks", "sign", "content"}
    assert data["shape"] == [2, 1]
    assert data["sign"] in (1, -1)


def test_g_tabloid_size_and_order_errors():
    g, p, _ = multipartite((2, 2))
    with pytest.raises(SizeMismatchError):
        enumerate_srh_g_tabloids(g, p, (2, 2, 1))
    # edgeless graph with an antichain order: non-adjacent pair is incomparable
    from chromsym import Graph

    bare = Graph.from_edges(2, [])
    antichain = poset_from_covers(2, [])
    with pytest.raises(OrderIncompatibleError):
        enumerate_srh_g_tabloids(bare, antichain, (1, 1))


def test_g_tabloids_of_example_poset_contain_depicted_ones():
    p = example_poset()
    g = incomparability_graph(p)
    tabs = enumerate_srh_g_tabloids(g, p, (2, 1, 1, 1, 1))
    for t in tabs:
        check_srh_g_tabloid(t, g, p)
    e = p.element
    depicted = [
        {(1, 1): e("a"), (1, 2): e("c"), (2, 1): e("d"), (3, 1): e("f"), (4, 1): e("b"), (5, 1): e("e")},
        {(1, 1): e("b"), (1, 2): e("f"), (2, 1): e("d"), (3, 1): e("c"), (4, 1): e("a"), (5, 1): e("e")},
        {(1, 1): e("b"), (1, 2): e("e"), (2, 1): e("a"), (3, 1): e("d"), (4, 1): e("f"), (5, 1): e("c")},
        {(1, 1): e("a"), (1, 2): e("c"), (2, 1): e("f"), (3, 1): e("b"), (4, 1): e("e"), (5, 1): e("d")},
    ]
    fillings = [t.filling for t in tabs]
    for want in depicted:
        assert want in fillings


def test_tail_sequences_of_depicted_tabloids():
    p = example_poset()
    g = incomparability_graph(p)
    tabs = enumerate_srh_g_tabloids(g, p, (2, 1, 1, 1, 1))
    e = p.element
    first = {(1, 1): e("a"), (1, 2): e("c"), (2, 1): e("d"), (3, 1): e("f"), (4, 1): e("b"), (5, 1): e("e")}
    tails = {
        "".join(p.label(v) for v in t.tail_sequence().vertices)
        for t in tabs
        if t.filling == first
    }
    assert tails == {"ebfd"}


def test_tail_head_split():
    p = example_poset()
    g = incomparability_graph(p)
    tabs = enumerate_srh_g_tabloids(g, p, (2, 1, 1, 1, 1))
    t = tabs[0]
    head, tail = tail_head_split(t)
    assert set(head) == {(1, 1), (1, 2)}
    assert len(tail.vertices) == 4
    # single column: everything is tail
    col = enumerate_srh_g_tabloids(g, p, (1,) * 6)[0]
    head, tail = tail_head_split(col)
    assert head == {} and len(tail.vertices) == 6
    # single row needs a stable increasing 6-chain, which this graph lacks
    assert enumerate_srh_g_tabloids(g, p, (6,)) == []
    # the edgeless graph has one, and its tail is empty
    edgeless, chain, _ = multipartite((4,))
    row = enumerate_srh_g_tabloids(edgeless, chain, (4,))
    assert len(row) == 1
    head, tail = tail_head_split(row[0])
    assert tail.vertices == () and len(head) == 4


def test_edgeless_chain_order_single_column():
    # one chain: fillings split the column into increasing runs, one set choice
    # per composition, and the signed sum collapses to 1
    from math import factorial

    for n in range(1, 6):
        g, p, _ = multipartite((n,))
        tabs = enumerate_srh_g_tabloids(g, p, (1,) * n)

        def comps(total):
            if total == 0:
                yield ()
                return
            for first in range(1, total + 1):
                for rest in comps(total - first):
                    yield (first, *rest)

        expected = 0
        for comp in comps(n):
            ways = factorial(n)
            for part in comp:
                ways //= factorial(part)
            expected += ways
        assert len(tabs) == expected
        assert sum(t.sign for t in tabs) == 1
        filtered = enumerate_srh_g_tabloids(g, p, (1,) * n, tail_filter=True)
        assert len(filtered) == 1
        assert list(filtered[0].tail_sequence().vertices) == list(range(n - 1, -1, -1))


def test_signed_counts_match_enumeration():
    for lam in [(2, 2), (3, 2), (2, 2, 1)]:
        g, p, _ = multipartite(lam)
        for mu in partitions_of(g.size):
            tabs = enumerate_srh_g_tabloids(g, p, mu)
            pos = sum(1 for t in tabs if t.sign > 0)
            neg = len(tabs) - pos
            assert signed_g_tabloid_counts(g, p, mu) == (pos, neg)
            filtered = [
                t
                for t in tabs
                if all(
                    not p.leq(u, v)
                    for u, v in zip(
                        t.tail_sequence().vertices, t.tail_sequence().vertices[1:]
                    )
                )
            ]
            fpos = sum(1 for t in filtered if t.sign > 0)
            assert signed_g_tabloid_counts(g, p, mu, tail_filter=True) == (
                fpos,
                len(filtered) - fpos,
            )


def test_total_order_fallback():
    # a 5-cycle is not an incomparability graph; the index order still works
    from chromsym import Graph

    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    tabs = enumerate_srh_g_tabloids(c5, None, (2, 2, 1))
    for t in tabs:
        check_srh_g_tabloid(t, c5, None)
    pos, neg = signed_g_tabloid_counts(c5, None, (2, 2, 1))
    assert (pos, neg) == (len([t for t in tabs if t.sign > 0]), len([t for t in tabs if t.sign < 0]))


def test_psi_involution_properties():
    for lam in [(2, 1, 1), (2, 2, 1), (3, 2)]:
        g, p, _ = multipartite(lam)
        for shape in partitions_of(g.size):
            groups = defaultdict(list)
            for t in enumerate_srh_g_tabloids(g, p, shape):
                groups[t.tail_sequence().vertices].append(t)
            for s, group in groups.items():
                if any(p.leq(u, v) for u, v in zip(s, s[1:])):
                    assert sum(t.sign for t in group) == 0, (lam, shape, s)
                    for t in group:
                        image = psi_involution(t, p)
                        check_srh_g_tabloid(image, g, p)
                        assert image in group
                        assert image.sign == -t.sign
                        assert image.tail_sequence() == t.tail_sequence()
                        assert psi_involution(image, p) == t
                        assert image != t
                else:
                    for t in group:
                        with pytest.raises(NoAscentError):
                            psi_involution(t, p)


def test_psi_merges_singletons_into_a_hook():
    g, p, _ = multipartite((2, 1))
    tabs = enumerate_srh_g_tabloids(g, p, (1, 1, 1))
    # tail sequence (0, 1, ...) ascends at the first step for the 2-chain 0<1
    singletons = [
        t
        for t in tabs
        if len(t.tabloid.hooks) == 3 and t.tail_sequence().vertices[:2] == (0, 1)
    ]
    assert singletons
    t = singletons[0]
    image = psi_involution(t, p)
    assert len(image.tabloid.hooks) == 2
    assert image.sign == -t.sign
    assert psi_involution(image, p) == t


def test_psi_toggles_hooks_that_cross_into_the_head():
    # needs a chain of length >= 4: the hook above the ascent climbs out of
    # the tail, and the toggled vertex joins it by transitivity
    g, p, _ = multipartite((4, 2))
    merges = splits = 0
    for shape in partitions_of(6):
        for t in enumerate_srh_g_tabloids(g, p, shape):
            ts = t.tail_sequence().vertices
            j = next(
                (i for i, (u, v) in enumerate(zip(ts, ts[1:])) if p.leq(u, v)), None
            )
            if j is None:
                continue
            ell = len(t.tabloid.shape.parts)
            upper = next(
                h for h in t.tabloid.hooks if (ell - j - 1, 1) in h.cells
            )
            crosses = any(t.tabloid.shape.parts[r - 1] > 1 for r, _ in upper.cells)
            if not crosses:
                continue
            image = psi_involution(t, p)
            check_srh_g_tabloid(image, g, p)
            assert psi_involution(image, p) == t and image.sign == -t.sign
            if (ell - j, 1) in upper.cells:
                splits += 1
            else:
                merges += 1
    assert merges == 2 and splits == 2


def test_content_reads_bottom_to_top():
    for t in enumerate_srh_tabloids((3, 3, 1)):
        lengths = [h.length for h in t.hooks]
        assert list(t.content) == lengths
        assert sort_to_partition(t.content).n == 7
