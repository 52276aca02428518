"""Ground-truth machinery independent of the tabloid engine.

The chromatic symmetric function is assembled in the monomial basis from
stable-partition counts, converted to the Schur basis through Kostka numbers
obtained from semistandard tableaux, and cross-checked against direct proper
coloring counts. None of this shares code with the signed tabloid routes, so
agreement between the two is a genuine consistency check.
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .errors import CapExceededError, UnequalWeightError
from .partitions import Partition, aspartition, partitions_of
from .posets import Graph, stable_partition_count
from .symfunc import SymFunc

DEFAULT_VERTEX_CAP = 12


class SSYT:
    """A semistandard filling: rows weakly increase, columns strictly increase."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        for i, row in enumerate(rows):
            if i and len(rows[i - 1]) < len(row):
                raise ValueError("row lengths must form a partition")
            for j, x in enumerate(row):
                if x < 1:
                    raise ValueError("entries must be positive")
                if j and row[j - 1] > x:
                    raise ValueError(f"row {i + 1} is not weakly increasing")
                if i and rows[i - 1][j] >= x:
                    raise ValueError(f"column {j + 1} is not strictly increasing")
        self.rows = rows

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    def weight(self) -> Partition:
        """Content as a partition when the multiplicities happen to decrease."""
        counts = {}
        for row in self.rows:
            for x in row:
                counts[x] = counts.get(x, 0) + 1
        return Partition(sorted(counts.values(), reverse=True))

    def entry(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    def __eq__(self, other):
        if isinstance(other, SSYT):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SSYT({[list(r) for r in self.rows]})"


def enumerate_ssyt(shape, content):
    """Yield every SSYT of the given shape whose entry i appears content[i-1] times."""
    shape = aspartition(shape)
    content = tuple(content)
    if shape.n != sum(content):
        return
    remaining = list(content)
    rows = [[0] * ln for ln in shape.parts]

    def rec(r, c):
        if r == len(rows):
            yield SSYT([row[:] for row in rows])
            return
        nr, nc = (r, c + 1) if c + 1 < len(rows[r]) else (r + 1, 0)
        lo = rows[r][c - 1] if c else 1
        for value in range(lo, len(remaining) + 1):
            if not remaining[value - 1]:
                continue
            if r and rows[r - 1][c] >= value:
                continue
            remaining[value - 1] -= 1
            rows[r][c] = value
            yield from rec(nr, nc)
            remaining[value - 1] += 1
        rows[r][c] = 0

    if shape.n == 0:
        yield SSYT([])
        return
    yield from rec(0, 0)


def _horizontal_strips(shape: tuple[int, ...], size: int):
    """Shapes nu <= shape with shape/nu a horizontal strip of `size` cells."""
    ell = len(shape)

    def rec(i, left, prev_kept):
        if i == ell:
            if left == 0:
                yield ()
            return
        hi = min(shape[i], prev_kept)
        lo = shape[i + 1] if i + 1 < ell else 0
        for keep in range(hi, lo - 1, -1):
            removed = shape[i] - keep
            if removed > left:
                continue
            for rest in rec(i + 1, left - removed, keep):
                yield (keep,) + rest

    for nu in rec(0, size, shape[0] if shape else 0):
        while nu and nu[-1] == 0:
            nu = nu[:-1]
        yield nu


@cache
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Count SSYT by stripping the largest entry as a horizontal strip."""
    if not content:
        return 1 if not shape else 0
    if sum(shape) != sum(content):
        return 0
    last = content[-1]
    return sum(
        _kostka(nu, content[:-1]) for nu in _horizontal_strips(shape, last)
    )


def kostka(lam, mu) -> int:
    """Number of SSYT of shape `lam` and content `mu`."""
    lam = aspartition(lam)
    mu = aspartition(mu)
    if lam.n != mu.n:
        raise UnequalWeightError(
            f"shape weight {lam.n} differs from content weight {mu.n}"
        )
    return _kostka(lam.parts, mu.parts)


class KostkaMatrix:
    """All Kostka numbers of one degree, keyed (shape, content)."""

    def __init__(self, degree: int):
        self.degree = degree
        self.index = list(partitions_of(degree))
        self.entries = {
            (lam, mu): kostka(lam, mu) for lam in self.index for mu in self.index
        }

    def entry(self, lam, mu) -> int:
        return self.entries[(aspartition(lam), aspartition(mu))]

    def inverse(self) -> dict:
        """Exact inverse as a dict keyed (mu, lam); unitriangular solve."""
        order = self.index  # reverse-lexicographic, refines dominance
        size = len(order)
        inv = {}
        for j in range(size):
            inv[(order[j], order[j])] = 1
            for i in range(j - 1, -1, -1):
                acc = 0
                for k in range(i + 1, j + 1):
                    left = self.entries[(order[i], order[k])]
                    if left:
                        acc += left * inv.get((order[k], order[j]), 0)
                if acc:
                    inv[(order[i], order[j])] = -acc
        return inv


def x_in_monomial(graph: Graph, cap: int = DEFAULT_VERTEX_CAP) -> SymFunc:
    """Chromatic symmetric function in the monomial basis.

    The coefficient of m_mu is the stable-partition count of type mu times
    the product of factorials of part multiplicities (each stable partition
    contributes one augmented monomial). The coloring specialization test
    pins this bridge down.
    """
    n = graph.size
    if n > cap:
        raise CapExceededError(f"graph has {n} vertices, cap is {cap}")
    coeffs = {}
    for mu in partitions_of(n):
        count = stable_partition_count(graph, mu)
        if count:
            for m in mu.multiplicities().values():
                count *= factorial(m)
            coeffs[mu] = count
    return SymFunc("monomial", n, coeffs)


def monomial_to_schur(func: SymFunc, cap: int = DEFAULT_VERTEX_CAP) -> SymFunc:
    """Solve f = sum c_lam s_lam by peeling in reverse-lexicographic order.

    Kostka unitriangularity makes this a forward substitution: when a
    partition is reached, every dominating one has been subtracted already.
    """
    if func.basis != "monomial":
        raise ValueError("input must be in the monomial basis")
    if func.degree > cap:
        raise CapExceededError(f"degree {func.degree} exceeds cap {cap}")
    residual = dict(func.coeffs)
    out = {}
    for lam in partitions_of(func.degree):
        c = residual.pop(lam, 0)
        if not c:
            continue
        out[lam] = c
        for mu in partitions_of(func.degree):
            if mu == lam:
                continue
            k = kostka(lam, mu)
            if k:
                residual[mu] = residual.get(mu, 0) - c * k
        residual = {k2: v for k2, v in residual.items() if v}
    if residual:
        raise ValueError("not a symmetric function integer combination of Schur terms")
    return SymFunc("schur", func.degree, out)


def schur_to_monomial(func: SymFunc) -> SymFunc:
    """Expand each Schur term through its Kostka row."""
    if func.basis != "schur":
        raise ValueError("input must be in the schur basis")
    coeffs = {}
    for lam, c in func.coeffs.items():
        for mu in partitions_of(func.degree):
            k = kostka(lam, mu)
            if k:
                coeffs[mu] = coeffs.get(mu, 0) + c * k
    return SymFunc("monomial", func.degree, coeffs)


def coloring_count(graph: Graph, q: int, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Number of proper colorings with colors 1..q, by direct enumeration."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = graph.size
    if n > cap:
        raise CapExceededError(f"graph has {n} vertices, cap is {cap}")
    colors = [0] * n

    def rec(v):
        if v == n:
            return 1
        total = 0
        for color in range(1, q + 1):
            if all(
                colors[u] != color for u in range(v) if graph.adjacent(u, v)
            ):
                colors[v] = color
                total += rec(v + 1)
        colors[v] = 0
        return total

    return rec(0)


@cache
def _ssyt_count_bounded(shape: tuple[int, ...], q: int) -> int:
    """Number of SSYT of `shape` with entries at most q.

    The cells holding the largest entry form a horizontal strip, so strip
    every possible one (including the empty strip) and recurse on q - 1.
    """
    if not shape:
        return 1
    if q == 0:
        return 0
    total = 0
    for size in range(sum(shape) + 1):
        for nu in _horizontal_strips(shape, size):
            total += _ssyt_count_bounded(nu, q - 1)
    return total


def specialize_ones(func: SymFunc, q: int) -> int:
    """Evaluate at x_1 = ... = x_q = 1 and all other variables 0."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    total = 0
    if func.basis == "monomial":
        for mu, c in func.coeffs.items():
            ell = len(mu)
            if ell > q:
                continue
            ways = 1
            for i in range(ell):
                ways *= q - i
            for m in mu.multiplicities().values():
                ways //= factorial(m)
            total += c * ways
        return total
    for lam, c in func.coeffs.items():
        total += c * _ssyt_count_bounded(lam.parts, q)
    return total
