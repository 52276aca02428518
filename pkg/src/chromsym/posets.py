"""Finite posets, incomparability graphs, and stable-partition counting.

Complete multipartite graphs are built as incomparability graphs of disjoint
chain unions, which is also where the fast stable-partition counting path
lives: a stable set of such a graph is always a subset of a single side, so
counting reduces to distributing part sizes over sides.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial

from ._util import iter_bits
from .errors import CapExceededError, CycleError, EmptyPartitionError
from .partitions import Partition, aspartition, partitions_of, dominates

MAX_VERTICES = 64  # vertex sets are single-word bitmasks


def _check_size(size: int):
    if size < 0:
        raise ValueError("size must be nonnegative")
    if size > MAX_VERTICES:
        raise CapExceededError(
            f"at most {MAX_VERTICES} elements are supported (bitmask representation)"
        )


class Poset:
    """A finite partial order on elements 0..size-1.

    The relation is stored as one reachability bitmask per element:
    ``above[x]`` has bit y set iff x <= y (reflexive). Optional string labels
    name the elements. Instances are immutable after construction.
    """

    __slots__ = ("size", "covers", "labels", "_above")

    def __init__(self, size, covers, labels=None):
        _check_size(size)
        covers = tuple((int(lo), int(hi)) for lo, hi in covers)
        for lo, hi in covers:
            if not (0 <= lo < size and 0 <= hi < size):
                raise ValueError(f"cover ({lo}, {hi}) out of range for size {size}")
            if lo == hi:
                raise CycleError(f"cover ({lo}, {hi}) relates an element to itself")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != size:
                raise ValueError("labels must name every element")
        above = [1 << i for i in range(size)]
        up = [[] for _ in range(size)]
        for lo, hi in covers:
            up[lo].append(hi)
        changed = True
        while changed:
            changed = False
            for lo in range(size):
                m = above[lo]
                for hi in up[lo]:
                    m |= above[hi]
                if m != above[lo]:
                    above[lo] = m
                    changed = True
        for x in range(size):
            for y in iter_bits(above[x] & ~(1 << x)):
                if (above[y] >> x) & 1:
                    raise CycleError(
                        f"elements {x} and {y} are mutually reachable; not a partial order"
                    )
        self.size = size
        self.covers = covers
        self.labels = labels
        self._above = tuple(above)

    @classmethod
    def chain(cls, n: int, labels=None) -> "Poset":
        """The total order 0 < 1 < ... < n-1."""
        return cls(n, [(i, i + 1) for i in range(n - 1)], labels)

    @classmethod
    def chain_union(cls, lengths) -> "Poset":
        """Disjoint chains of the given lengths, numbered consecutively.

        Within each chain the lowest-numbered vertex is the minimum.
        """
        lengths = tuple(int(x) for x in lengths)
        covers = []
        start = 0
        for ln in lengths:
            covers.extend((start + i, start + i + 1) for i in range(ln - 1))
            start += ln
        return cls(start, covers)

    def leq(self, x: int, y: int) -> bool:
        return bool((self._above[x] >> y) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def above_mask(self, x: int) -> int:
        """Bitmask of all y with x <= y, including x itself."""
        return self._above[x]

    def strictly_above_mask(self, x: int) -> int:
        return self._above[x] & ~(1 << x)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def element(self, label: str) -> int:
        """Index of the element carrying `label`."""
        if not self.labels:
            raise ValueError("poset has no labels")
        return self.labels.index(label)

    def to_json(self) -> dict:
        data = {"n": self.size, "covers": [list(c) for c in self.covers]}
        if self.labels:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        return cls(data["n"], data.get("covers", []), data.get("labels"))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={list(self.covers)})"


def poset_from_covers(size: int, covers, labels=None) -> Poset:
    """Poset whose order is the reflexive-transitive closure of the covers."""
    return Poset(size, covers, labels)


class Graph:
    """A finite simple graph on vertices 0..size-1 with bitmask adjacency.

    ``sides`` is set only for graphs built by :func:`multipartite`, recording
    the stable sides; it unlocks the fast counting path.
    """

    __slots__ = ("size", "_adj", "sides")

    def __init__(self, size, edges, sides=None):
        _check_size(size)
        adj = [0] * size
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < size and 0 <= v < size):
                raise ValueError(f"edge ({u}, {v}) out of range for size {size}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.size = size
        self._adj = tuple(adj)
        self.sides = sides

    @classmethod
    def from_edges(cls, size, edges) -> "Graph":
        return cls(size, edges)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def adj_mask(self, u: int) -> int:
        return self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.size):
            for v in iter_bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def side_sizes(self) -> tuple[int, ...] | None:
        if self.sides is None:
            return None
        return tuple(len(s) for s in self.sides)

    def to_json(self) -> dict:
        return {"n": self.size, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["n"], data.get("edges", []))

    def __repr__(self) -> str:
        return f"Graph(size={self.size}, edges={self.edges()})"


@dataclass(frozen=True)
class MultipartiteSpec:
    """Bookkeeping for K_lambda: which side and chain rank each vertex has."""

    type: Partition
    side_of: tuple[int, ...]
    rank_in_side: tuple[int, ...]


@dataclass(frozen=True)
class StablePartition:
    """A division of the vertices into disjoint stable blocks."""

    blocks: tuple[frozenset, ...]

    @property
    def type(self) -> Partition:
        return Partition(sorted((len(b) for b in self.blocks), reverse=True))

    def validate(self, graph: Graph):
        seen = set()
        for block in self.blocks:
            if block & seen:
                raise ValueError("blocks are not disjoint")
            seen |= block
            block = sorted(block)
            for i, u in enumerate(block):
                for v in block[i + 1 :]:
                    if graph.adjacent(u, v):
                        raise ValueError(f"block {block} is not stable: edge ({u}, {v})")
        if seen != set(range(graph.size)):
            raise ValueError("blocks do not cover the vertex set")


def incomparability_graph(poset: Poset) -> Graph:
    """Graph on the poset elements with edges between incomparable pairs."""
    edges = [
        (x, y)
        for x in range(poset.size)
        for y in range(x + 1, poset.size)
        if not poset.comparable(x, y)
    ]
    return Graph(poset.size, edges)


def multipartite(lam) -> tuple[Graph, Poset, MultipartiteSpec]:
    """Build K_lambda as the incomparability graph of disjoint chains.

    Side i holds lam[i] vertices, numbered consecutively; rank 0 is the
    minimum of its chain. Returns the graph, the chain-union poset, and the
    side bookkeeping.
    """
    lam = aspartition(lam)
    if not lam:
        raise EmptyPartitionError("a multipartite graph needs at least one side")
    poset = Poset.chain_union(lam.parts)
    sides = []
    side_of = []
    rank_in_side = []
    start = 0
    for i, ln in enumerate(lam.parts):
        sides.append(tuple(range(start, start + ln)))
        side_of.extend([i] * ln)
        rank_in_side.extend(range(ln))
        start += ln
    graph = incomparability_graph(poset)
    graph = Graph(graph.size, graph.edges(), sides=tuple(sides))
    return graph, poset, MultipartiteSpec(lam, tuple(side_of), tuple(rank_in_side))


def _stable_extensions(adj, allowed_mask, base_vertex, size):
    """Yield bitmasks of stable sets of `size` inside allowed_mask containing base_vertex."""

    def rec(mask, candidates, left):
        if left == 0:
            yield mask
            return
        cand = candidates
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(mask | low, cand & ~adj[v], left - 1)

    start = 1 << base_vertex
    candidates = allowed_mask & ~adj[base_vertex] & ~((start << 1) - 1)
    yield from rec(start, candidates, size - 1)


def stable_sets(graph: Graph, size: int):
    """Yield every stable set of exactly `size` vertices once, as a frozenset."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    if size == 0:
        yield frozenset()
        return
    full = (1 << graph.size) - 1
    adj = graph._adj
    for v in range(graph.size):
        for mask in _stable_extensions(adj, full, v, size):
            yield frozenset(iter_bits(mask))


def _partition_blocks(graph: Graph, mu: Partition):
    """Backtracking over blocks; the block of the lowest uncovered vertex first.

    Yields tuples of block bitmasks, one tuple per unordered partition.
    Consuming lazily gives existence checks their early exit.
    """
    adj = graph._adj
    remaining = Counter(mu.parts)

    def rec(uncovered, acc):
        if uncovered == 0:
            yield tuple(acc)
            return
        v = (uncovered & -uncovered).bit_length() - 1
        for s in sorted((s for s, c in remaining.items() if c), reverse=True):
            remaining[s] -= 1
            for mask in _stable_extensions(adj, uncovered, v, s):
                acc.append(mask)
                yield from rec(uncovered & ~mask, acc)
                acc.pop()
            remaining[s] += 1

    yield from rec((1 << graph.size) - 1, [])


def stable_partitions(graph: Graph, mu):
    """Yield each unordered stable partition of type `mu` exactly once."""
    mu = aspartition(mu)
    if mu.n != graph.size:
        return
    for blocks in _partition_blocks(graph, mu):
        ordered = sorted(
            (frozenset(iter_bits(m)) for m in blocks), key=lambda b: (-len(b), min(b))
        )
        yield StablePartition(tuple(ordered))


def stable_partition_count_backtracking(graph: Graph, mu) -> int:
    """Count unordered stable partitions of type `mu` by direct backtracking."""
    mu = aspartition(mu)
    if mu.n != graph.size:
        return 0
    return sum(1 for _ in _partition_blocks(graph, mu))


def _split_choices(parts: tuple[int, ...], target: int):
    """Yield (chosen, remaining) sub-multisets of `parts` with sum(chosen) == target.

    Both come back as weakly decreasing tuples.
    """
    values = sorted(set(parts), reverse=True)
    counts = [parts.count(v) for v in values]
    take = [0] * len(values)

    def rec(i, t):
        if i == len(values):
            if t == 0:
                chosen = []
                left = []
                for v, c, k in zip(values, counts, take):
                    chosen.extend([v] * k)
                    left.extend([v] * (c - k))
                yield tuple(chosen), tuple(left)
            return
        v = values[i]
        for k in range(min(counts[i], t // v), -1, -1):
            take[i] = k
            yield from rec(i + 1, t - k * v)
        take[i] = 0

    yield from rec(0, target)


def _block_split_ways(size: int, block_sizes: tuple[int, ...]) -> int:
    """Number of set partitions of a `size`-set into blocks of the given sizes."""
    ways = factorial(size)
    for b in block_sizes:
        ways //= factorial(b)
    for m in Counter(block_sizes).values():
        ways //= factorial(m)
    return ways


@cache
def multipartite_stable_partition_count(sides: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Stable partitions of K_sides of type mu, by distributing parts over sides.

    Every stable set lives inside one side, so a stable partition is a choice,
    per side, of a sub-multiset of mu summing to the side size, together with
    a set partition of that side realizing it.
    """
    if sum(mu) != sum(sides):
        return 0
    if not sides:
        return 1
    first, rest = sides[0], sides[1:]
    total = 0
    for chosen, remaining in _split_choices(mu, first):
        total += _block_split_ways(first, chosen) * multipartite_stable_partition_count(
            rest, remaining
        )
    return total


@cache
def multipartite_has_stable_partition(sides: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """Existence version of the side-distribution count, with early exit."""
    if sum(mu) != sum(sides):
        return False
    if not sides:
        return True
    first, rest = sides[0], sides[1:]
    return any(
        multipartite_has_stable_partition(rest, remaining)
        for _, remaining in _split_choices(mu, first)
    )


def stable_partition_count(graph: Graph, mu) -> int:
    """Number of unordered stable partitions of type `mu`.

    Multipartite graphs use the side-distribution fast path; everything else
    falls back to backtracking. Returns 0 when the weights disagree.
    """
    mu = aspartition(mu)
    if mu.n != graph.size:
        return 0
    sizes = graph.side_sizes()
    if sizes is not None:
        return multipartite_stable_partition_count(sizes, mu.parts)
    return stable_partition_count_backtracking(graph, mu)


def semi_ordered_count(graph: Graph, mu) -> int:
    """Stable partitions of type `mu` with same-size blocks additionally ordered."""
    mu = aspartition(mu)
    count = stable_partition_count(graph, mu)
    for m in mu.multiplicities().values():
        count *= factorial(m)
    return count


def has_stable_partition(graph: Graph, mu) -> bool:
    """True iff the graph has at least one stable partition of type `mu`."""
    mu = aspartition(mu)
    if mu.n != graph.size:
        return False
    sizes = graph.side_sizes()
    if sizes is not None:
        return multipartite_has_stable_partition(sizes, mu.parts)
    return next(_partition_blocks(graph, mu), None) is not None


def niceness_violation(graph: Graph, lam_present, max_length=None) -> Partition | None:
    """First dominated type (reverse-lexicographic) with no stable partition.

    `lam_present` must be the type of some stable partition the graph has.
    A returned type certifies, by contraposition, that the graph is not
    Schur-positive. None means every dominated type is achievable, optionally
    only checking types of length at most `max_length`.
    """
    lam_present = aspartition(lam_present)
    if not has_stable_partition(graph, lam_present):
        raise ValueError(f"graph has no stable partition of type {lam_present!r}")
    for mu in partitions_of(lam_present.n, max_length=max_length):
        if not dominates(lam_present, mu):
            continue
        if not has_stable_partition(graph, mu):
            return mu
    return None
