"""Schur coefficients of chromatic symmetric functions.

Four routes compute the same numbers and check each other:

* ``ww``      - signed sum over all special rim hook tabloids of the shape,
                weighted by semi-ordered stable partition counts;
* ``tabloid`` - signed count of vertex-filled tabloids under a compatible
                vertex order;
* ``tail``    - the tabloid route restricted to tabloids whose tail sequence
                is non-increasing (valid for incomparability graphs);
* ``oracle``  - monomial expansion from stable-partition counts followed by
                a Kostka solve.

Closed forms cover the two multipartite families whose sides are all of size
2, or one side of size 3 and the rest of size 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import perm

from .errors import BadShapeError, CapExceededError, OrderIncompatibleError
from .oracle import DEFAULT_VERTEX_CAP, monomial_to_schur, x_in_monomial
from .partitions import Partition, aspartition, partitions_of, sort_to_partition
from .posets import Graph, Poset, incomparability_graph, semi_ordered_count
from .sequences import nsp_chain_union
from .symfunc import SymFunc
from .tabloids import enumerate_srh_tabloids, signed_g_tabloid_counts

ROUTES = ("auto", "ww", "tabloid", "tail", "closed", "oracle")


@dataclass(frozen=True)
class CoeffReport:
    """One Schur coefficient with the route that produced it."""

    shape: Partition
    value: int
    route: str
    tabloid_counts: tuple[int, int] | None = None

    def to_json(self) -> dict:
        data = {
            "lambda": self.shape.to_json(),
            "value": str(self.value),
            "route": self.route,
        }
        data["tabloid_counts"] = (
            list(self.tabloid_counts) if self.tabloid_counts else None
        )
        return data


@dataclass(frozen=True)
class ScanResult:
    """Outcome of a full positivity scan."""

    all_nonnegative: bool
    first_negative: tuple[Partition, int] | None = None

    def to_json(self) -> dict:
        data = {"all_nonnegative": self.all_nonnegative}
        if self.first_negative:
            lam, value = self.first_negative
            data["first_negative"] = {"lambda": lam.to_json(), "value": str(value)}
        else:
            data["first_negative"] = None
        return data


def coeff_ww(graph: Graph, lam) -> int:
    """Signed tabloid sum weighted by semi-ordered stable partition counts."""
    lam = aspartition(lam)
    if lam.n != graph.size:
        return 0
    total = 0
    for t in enumerate_srh_tabloids(lam):
        so = semi_ordered_count(graph, sort_to_partition(t.content))
        if so:
            total += t.sign * so
    return total


def coeff_tabloids(graph: Graph, order, lam) -> int:
    """Signed count of vertex-filled tabloids of shape `lam`."""
    lam = aspartition(lam)
    if lam.n != graph.size:
        return 0
    pos, neg = signed_g_tabloid_counts(graph, order, lam)
    return pos - neg


def coeff_tail(poset: Poset, lam) -> int:
    """Signed count over tabloids with non-increasing tail sequence.

    The graph is the incomparability graph of `poset`, ordered by the poset.
    """
    lam = aspartition(lam)
    if lam.n != poset.size:
        return 0
    graph = incomparability_graph(poset)
    pos, neg = signed_g_tabloid_counts(graph, poset, lam, tail_filter=True)
    return pos - neg


def coeff_closed_2beta(beta: int, c: int, d: int) -> int:
    """Coefficient of shape (2^c, 1^d) for sides (2^beta).

    Equals the ordered choices of c sides times the spanning non-increasing
    count of what is left.
    """
    if beta < 1 or c < 0 or d < 0 or 2 * c + d != 2 * beta or c > beta:
        raise BadShapeError(
            f"shape (2^{c}, 1^{d}) does not pair with sides (2^{beta})"
        )
    return perm(beta, c) * nsp_chain_union((2,) * (beta - c))


def _shape_rows(lam: Partition) -> tuple[int, int, int] | None:
    """Split a shape into (#rows of 3, #rows of 2, #rows of 1); None if a row exceeds 3."""
    threes = twos = ones = 0
    for part in lam.parts:
        if part > 3:
            return None
        if part == 3:
            threes += 1
        elif part == 2:
            twos += 1
        else:
            ones += 1
    return threes, twos, ones


def coeff_closed_32beta(beta: int, lam) -> int:
    """Coefficient of `lam` for sides (3, 2^beta), as a signed combination of
    spanning non-increasing counts; zero on shapes no tabloid can have."""
    if beta < 1:
        raise BadShapeError("the closed family needs beta >= 1")
    lam = aspartition(lam)
    if lam.n != 2 * beta + 3:
        raise BadShapeError(
            f"shape of weight {lam.n} does not pair with sides (3, 2^{beta})"
        )
    rows = _shape_rows(lam)
    if rows is None or rows[0] > 1:
        return 0
    threes, c, d = rows
    if threes == 1:
        return perm(beta, c) * nsp_chain_union((2,) * (beta - c))
    if c == 0:
        return nsp_chain_union((3,) + (2,) * beta)
    head = (
        (beta - c + 1) * nsp_chain_union((3,) + (2,) * (beta - c)) if beta >= c else 0
    )
    return perm(beta, c - 1) * (
        head
        - nsp_chain_union((2,) * (beta - c + 1))
        + (c + 2) * nsp_chain_union((2,) * (beta - c + 1) + (1,))
    )


def _closed_family(graph: Graph) -> tuple[str, int] | None:
    sizes = graph.side_sizes()
    if not sizes:
        return None
    if all(s == 2 for s in sizes):
        return "2beta", len(sizes)
    if len(sizes) >= 2 and sizes[0] == 3 and all(s == 2 for s in sizes[1:]):
        return "32beta", len(sizes) - 1
    return None


def _closed_coeff(family: tuple[str, int], lam: Partition) -> int:
    kind, beta = family
    if kind == "32beta":
        return coeff_closed_32beta(beta, lam)
    rows = _shape_rows(lam)
    if rows is None or rows[0]:
        return 0
    _, c, d = rows
    return coeff_closed_2beta(beta, c, d)


def _poset_for_sides(graph: Graph) -> Poset:
    # sides hold consecutively numbered vertices, rank 0 the chain minimum
    return Poset.chain_union([len(s) for s in graph.sides])


def _pick_route(graph: Graph, order) -> str:
    if _closed_family(graph):
        return "closed"
    if isinstance(order, Poset) or graph.sides is not None:
        return "tail"
    return "tabloid"


def coeff_report(graph: Graph, order, lam, route: str = "auto") -> CoeffReport:
    """Compute one coefficient, recording the route and, where the route
    enumerates tabloids, the positive and negative counts."""
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    lam = aspartition(lam)
    if route == "auto":
        route = _pick_route(graph, order)
    if route == "ww":
        return CoeffReport(lam, coeff_ww(graph, lam), "ww")
    if route == "oracle":
        value = monomial_to_schur(x_in_monomial(graph))[lam]
        return CoeffReport(lam, value, "oracle")
    if route == "closed":
        family = _closed_family(graph)
        if family is None:
            raise BadShapeError("closed forms only apply to sides (2^b) or (3, 2^b)")
        value = _closed_coeff(family, lam) if lam.n == graph.size else 0
        return CoeffReport(lam, value, "closed")
    if lam.n != graph.size:
        return CoeffReport(lam, 0, route)
    if route == "tail":
        if isinstance(order, Poset):
            poset = order
        elif graph.sides is not None:
            poset = _poset_for_sides(graph)
        else:
            raise OrderIncompatibleError(
                "the tail route needs the graph presented as inc(P) with its poset"
            )
        pos, neg = signed_g_tabloid_counts(graph, poset, lam, tail_filter=True)
        return CoeffReport(lam, pos - neg, "tail", (pos, neg))
    pos, neg = signed_g_tabloid_counts(graph, order, lam)
    return CoeffReport(lam, pos - neg, "tabloid", (pos, neg))


_expansion_cache: dict = {}


def expand_schur(
    graph: Graph, order=None, route: str = "auto", memoize: bool = False
) -> SymFunc:
    """Full Schur expansion of the chromatic symmetric function of `graph`.

    Zero coefficients are omitted. `memoize` keeps results keyed by the edge
    set; off by default since scans rarely repeat a graph.
    """
    key = None
    if memoize:
        key = (graph.size, tuple(graph.edges()), route)
        if key in _expansion_cache:
            return _expansion_cache[key]
    coeffs = {}
    for lam in partitions_of(graph.size):
        value = coeff_report(graph, order, lam, route).value
        if value:
            coeffs[lam] = value
    result = SymFunc("schur", graph.size, coeffs)
    if memoize:
        _expansion_cache[key] = result
    return result


def positivity_scan(
    graph: Graph, order=None, cap: int = DEFAULT_VERTEX_CAP
) -> ScanResult:
    """Scan all shapes in reverse-lexicographic order for a negative coefficient."""
    if graph.size > cap:
        raise CapExceededError(f"graph has {graph.size} vertices, cap is {cap}")
    for lam in partitions_of(graph.size):
        value = coeff_report(graph, order, lam, "auto").value
        if value < 0:
            return ScanResult(False, (lam, value))
    return ScanResult(True, None)
